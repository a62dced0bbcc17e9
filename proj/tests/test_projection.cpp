#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "ftc/param.hpp"
#include "ftc/projection.hpp"

using namespace ftc;

namespace {

PolyCurve trefoil(int n = 200) {
    return sample_uniform(torus_knot_curve(2, 3), n).polygon;
}

Vec cross3(const Vec& a, const Vec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

} // namespace

TEST_CASE("grassmannian sampling is deterministic and orthonormal") {
    auto p1 = sample_grassmannian(4, 2, 123, 50);
    auto p2 = sample_grassmannian(4, 2, 123, 50);
    for (std::size_t i = 0; i < p1.size(); ++i)
        for (int j = 0; j < 2; ++j)
            REQUIRE(p1[i].basis[j] == p2[i].basis[j]);
    for (const auto& p : p1) {
        REQUIRE(norm(p.basis[0]) == Catch::Approx(1.0).margin(1e-12));
        REQUIRE(norm(p.basis[1]) == Catch::Approx(1.0).margin(1e-12));
        REQUIRE(std::abs(dot(p.basis[0], p.basis[1])) <= 1e-12);
    }
    REQUIRE_THROWS_AS(sample_grassmannian(3, 3, 0, 1), BadDims);
    REQUIRE_THROWS_AS(sample_grassmannian(3, 0, 0, 1), BadDims);
}

TEST_CASE("line directions uniform on the circle (chi-squared)") {
    const int N = 100000, B = 36;
    std::vector<int> bins(B, 0);
    auto plans = sample_grassmannian(2, 1, 2024, N);
    for (const auto& p : plans) {
        double a = std::atan2(p.basis[0][1], p.basis[0][0]);
        int b = int((a + kPi) / (2 * kPi) * B);
        bins[std::clamp(b, 0, B - 1)]++;
    }
    double chi2 = 0, expect = double(N) / B;
    for (int b : bins) chi2 += (b - expect) * (b - expect) / expect;
    REQUIRE(chi2 < 57.34);  // chi2_{35} at the 1% level
}

TEST_CASE("plane normals uniform on the sphere (chi-squared)") {
    const int N = 100000;
    // 10 z-slices x 10 azimuth sectors = 100 equal-measure bins
    std::vector<int> bins(100, 0);
    auto plans = sample_grassmannian(3, 2, 77, N);
    for (const auto& p : plans) {
        Vec nrm = normalized(cross3(p.basis[0], p.basis[1]));
        int zi = std::clamp(int((nrm[2] + 1.0) / 2.0 * 10), 0, 9);
        double a = std::atan2(nrm[1], nrm[0]);
        int ai = std::clamp(int((a + kPi) / (2 * kPi) * 10), 0, 9);
        bins[zi * 10 + ai]++;
    }
    double chi2 = 0, expect = double(N) / 100;
    for (int b : bins) chi2 += (b - expect) * (b - expect) / expect;
    REQUIRE(chi2 < 134.64);  // chi2_{99} at the 1% level
}

TEST_CASE("project basics") {
    PolyCurve sq = make_loop({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    ProjectionPlan to_x{2, 1, {Vec{1, 0}}};
    auto p = project(sq, to_x);
    REQUIRE(p.dim == 1);
    REQUIRE(p.vertex_count() == 2);  // two vertices collapse pairwise

    // projecting onto the affine hull is a congruence
    PolyCurve planar3d = make_loop({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
    ProjectionPlan xy{3, 2, {Vec{1, 0, 0}, Vec{0, 1, 0}}};
    auto q = project(planar3d, xy);
    REQUIRE(length(q) == Catch::Approx(4.0).margin(1e-14));

    auto tref = trefoil();
    for (const auto& plan : sample_grassmannian(3, 2, 9, 10))
        REQUIRE(length(project(tref, plan)) < length(tref));

    REQUIRE_THROWS_AS(project(sq, xy), DimensionMismatch);
}

TEST_CASE("line projection TC is quantized") {
    PolyCurve hex = sample_uniform(circle_curve(), 6).polygon;
    REQUIRE(tc_line_projection(hex, Vec{1, 0}) ==
            Catch::Approx(kTwoPi).margin(1e-15));
    REQUIRE(tc_line_projection(hex, Vec{0.3, -0.8}) ==
            Catch::Approx(kTwoPi).margin(1e-15));

    PolyCurve flat3d = make_loop({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
    REQUIRE_THROWS_AS(tc_line_projection(flat3d, Vec{0, 0, 1}),
                      DegenerateDirection);

    auto tref = trefoil();
    RngStream rng(12);
    for (int t = 0; t < 200; ++t) {
        double v = tc_line_projection(tref, rng.unit_vec(3));
        REQUIRE(v >= 4 * kPi - 1e-12);
        double mult = v / (2 * kPi);
        REQUIRE(mult == Catch::Approx(std::round(mult)).margin(1e-12));
    }
}

TEST_CASE("tc projection average hits TC") {
    // single corner of angle pi/3 in E^3
    double th = kPi / 3;
    PolyCurve corner =
        make_arc({{-1, 0, 0}, {0, 0, 0}, {std::cos(th), std::sin(th), 0}});
    auto est = tc_projection_average(corner, 1, 1, 20000);
    REQUIRE(std::abs(est.mean - th) <= std::max(3 * est.stderr_, 0.01 * th));

    // cusp arc: every projection is again a cusp
    PolyCurve cusp = make_arc({{1, 0, 0}, {0, 0, 0}, {1, 0, 0}});
    auto ec = tc_projection_average(cusp, 1, 2, 1000);
    REQUIRE(ec.mean == kPi);
    REQUIRE(ec.stderr_ == 0.0);

    auto tref = trefoil();
    double tc = total_curvature(tref);
    auto e2 = tc_projection_average(tref, 2, 3, 20000);
    REQUIRE(std::abs(e2.mean - tc) <= std::max(3 * e2.stderr_, 0.01 * tc));
}

TEST_CASE("factored projections agree with direct line average") {
    auto tref = trefoil();
    auto direct = tc_projection_average(tref, 1, 4, 20000);
    // factor through a random plane, then a random in-plane direction
    std::vector<double> vals;
    auto planes = sample_grassmannian(3, 2, 5, 2000);
    for (std::size_t i = 0; i < planes.size(); ++i) {
        PolyCurve flat = project(tref, planes[i]);
        RngStream rng(6, i);
        for (int j = 0; j < 10; ++j) {
            double a = rng.uniform(0, 2 * kPi);
            try {
                vals.push_back(
                    tc_line_projection(flat, Vec{std::cos(a), std::sin(a)}));
            } catch (const DegenerateDirection&) {
            }
        }
    }
    double mean = 0;
    for (double v : vals) mean += v;
    mean /= double(vals.size());
    double var = 0;
    for (double v : vals) var += (v - mean) * (v - mean);
    double se = std::sqrt(var / (double(vals.size()) * (vals.size() - 1.0)));
    REQUIRE(std::abs(mean - direct.mean) <= 3 * (se + direct.stderr_));
}

TEST_CASE("crofton length estimates") {
    auto circ = sample_uniform(circle_curve(), 256).polygon;
    auto e = crofton_length_estimate(circ, 7, 20000);
    REQUIRE(std::abs(e.mean - length(circ)) <=
            std::max(3 * e.stderr_, 0.01 * length(circ)));

    PolyCurve seg = make_arc({{0, 0}, {1, 0}});
    auto es = crofton_length_estimate(seg, 8, 100000);
    REQUIRE(std::abs(es.mean - 1.0) <= 0.01);

    PolyCurve sq = make_loop({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    auto eq = crofton_length_estimate(sq, 9, 100000);
    REQUIRE(std::abs(eq.mean - 4.0) <= 0.04);
}

TEST_CASE("spherical crofton estimates TC") {
    PolyCurve sq = make_loop({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    auto e = spherical_crofton_tc(sq, 10, 100000);
    REQUIRE(std::abs(e.mean - kTwoPi) <= std::max(3 * e.stderr_, 0.02 * kTwoPi));
    // mean crossing count is TC/pi = 2
    REQUIRE(e.mean / kPi == Catch::Approx(2.0).margin(0.05));

    PolyCurve seg = make_arc({{0, 0}, {1, 0}, {2, 0}});
    auto es = spherical_crofton_tc(seg, 11, 1000);
    REQUIRE(es.mean == 0.0);

    auto tref = trefoil();
    double tc = total_curvature(tref);
    auto et = spherical_crofton_tc(tref, 12, 50000);
    REQUIRE(std::abs(et.mean - tc) <= std::max(3 * et.stderr_, 0.02 * tc));

    // antipodal tangents (cusp) are handled by gap splitting
    PolyCurve cusp = make_loop({{-1, 0}, {1, 0}});
    auto ec = spherical_crofton_tc(cusp, 13, 50000);
    REQUIRE(std::abs(ec.mean - kTwoPi) <= std::max(3 * ec.stderr_, 0.02 * kTwoPi));
}

TEST_CASE("bridge estimate") {
    PolyCurve hex = sample_uniform(circle_curve(), 6).polygon;
    auto r = bridge_estimate(hex, 14, 500);
    REQUIRE(r.min_maxima == 1);
    REQUIRE(r.certified_unknotted);

    // round circle embedded in E^3
    std::vector<Vec> vs;
    for (int i = 0; i < 40; ++i) {
        double t = kTwoPi * i / 40;
        vs.push_back(Vec{std::cos(t), std::sin(t), 0.0});
    }
    auto r3 = bridge_estimate(make_loop(std::move(vs)), 15, 500);
    REQUIRE(r3.min_maxima == 1);

    auto rt = bridge_estimate(trefoil(), 16, 2000);
    REQUIRE(rt.min_maxima == 2);
    REQUIRE_FALSE(rt.certified_unknotted);
}

TEST_CASE("projection pythagoras") {
    double s = 1.0 / std::sqrt(2.0);
    PolyCurve diag = make_arc({{0, 0}, {s, s}});
    auto r = projection_pythagoras_check(diag, 1);
    REQUIRE(r.holds);
    REQUIRE(r.a * r.a + r.b * r.b == Catch::Approx(r.L * r.L).margin(1e-12));

    std::vector<Vec> vs;
    for (int i = 0; i < 30; ++i) {
        double t = kTwoPi * i / 30;
        vs.push_back(Vec{std::cos(t), std::sin(t), 0.0});
    }
    auto rc = projection_pythagoras_check(make_loop(std::move(vs)), 2);
    REQUIRE(rc.holds);
    REQUIRE(rc.b == 0.0);
    REQUIRE(rc.a == Catch::Approx(rc.L));

    RngStream rng(17);
    for (int t = 0; t < 1000; ++t) {
        int d = 2 + int(rng.next_u64() % 3);
        std::vector<Vec> pts;
        for (int i = 0; i < 6; ++i) pts.push_back(rng.gaussian_vec(d));
        PolyCurve c = t % 2 ? make_loop(pts) : make_arc(pts);
        int m = 1 + int(rng.next_u64() % (d - 1));
        REQUIRE(projection_pythagoras_check(c, m).holds);
    }
}
