#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "ftc/curvature.hpp"
#include "ftc/param.hpp"
#include "ftc/rng.hpp"

using namespace ftc;

namespace {

PolyCurve random_curve(RngStream& rng, int d, int n, bool loop) {
    std::vector<Vec> vs;
    for (int i = 0; i < n; ++i) vs.push_back(rng.gaussian_vec(d));
    return loop ? make_loop(std::move(vs)) : make_arc(std::move(vs));
}

// Reference Frechet: exhaustive recursion over monotone vertex couplings.
double frechet_brute(const std::vector<Vec>& p, const std::vector<Vec>& q,
                     std::size_t i, std::size_t j) {
    double d = dist(p[i], q[j]);
    if (i == 0 && j == 0) return d;
    double best = std::numeric_limits<double>::infinity();
    if (i > 0) best = std::min(best, frechet_brute(p, q, i - 1, j));
    if (j > 0) best = std::min(best, frechet_brute(p, q, i, j - 1));
    if (i > 0 && j > 0) best = std::min(best, frechet_brute(p, q, i - 1, j - 1));
    return std::max(best, d);
}

} // namespace

TEST_CASE("normalize collapses duplicates") {
    PolyCurve c = make_arc({{0, 0}, {0, 0}, {1, 0}});
    auto n = normalize(c);
    REQUIRE(n.vertex_count() == 2);
    REQUIRE(n.vertices[1] == Vec{1, 0});

    PolyCurve id = make_arc({{0, 0}, {1, 0}, {2, 0}});
    REQUIRE(normalize(id).vertex_count() == 3);

    PolyCurve bad = make_loop({{1, 2}, {1, 2}, {1, 2}});
    REQUIRE_THROWS_AS(normalize(bad), DegenerateCurve);

    // loop wrap-around weld
    PolyCurve wrap = make_loop({{0, 0}, {1, 0}, {0, 1}, {0, 0}});
    REQUIRE(normalize(wrap).vertex_count() == 3);
}

TEST_CASE("length of basic shapes") {
    PolyCurve sq = make_loop({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    REQUIRE(length(sq) == Catch::Approx(4.0).margin(1e-15));

    auto ngon = sample_uniform(circle_curve(), 17).polygon;
    REQUIRE(length(ngon) ==
            Catch::Approx(2 * 17 * std::sin(kPi / 17)).margin(1e-12));

    PolyCurve digon = make_loop({{-1, 0}, {1, 0}});
    REQUIRE(length(digon) == Catch::Approx(4.0).margin(1e-15));
}

TEST_CASE("length preserved by normalize") {
    RngStream rng(11);
    for (int t = 0; t < 50; ++t) {
        PolyCurve c = random_curve(rng, 3, 8, t % 2 == 0);
        c.vertices.insert(c.vertices.begin() + 3, c.vertices[3]);  // duplicate
        REQUIRE(length(normalize(c)) == Catch::Approx(length(c)).margin(1e-12));
    }
}

TEST_CASE("inscribe and sampling") {
    auto ms = sample_uniform(circle_curve(), 4);
    REQUIRE(ms.polygon.closed());
    REQUIRE(ms.mesh == Catch::Approx(kTwoPi / 4));
    REQUIRE(length(ms.polygon) == Catch::Approx(4 * std::sqrt(2.0)).margin(1e-12));

    REQUIRE_THROWS_AS(sample_uniform(circle_curve(), 2), BadParams);
    REQUIRE_THROWS_AS(inscribe(circle_curve(), {0.0, 0.5, 0.5}), BadParams);
    REQUIRE_THROWS_AS(inscribe(circle_curve(), {0.0, 99.0}), BadParams);

    auto tref = sample_uniform(torus_knot_curve(2, 3), 200);
    REQUIRE(tref.polygon.vertex_count() == 200);
    REQUIRE(tref.mesh == Catch::Approx(kTwoPi / 200));
}

TEST_CASE("point_at_arclength") {
    PolyCurve sq = make_loop({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    REQUIRE(point_at_arclength(sq, 0.5) == Vec{0.5, 0.0});
    REQUIRE(point_at_arclength(sq, 4.0) == point_at_arclength(sq, 0.0));
    auto mid = point_at_arclength(sq, 2.0);
    REQUIRE(mid[0] == Catch::Approx(1.0));
    REQUIRE(mid[1] == Catch::Approx(1.0));

    PolyCurve arc = make_arc({{0, 0}, {1, 0}});
    REQUIRE_THROWS_AS(point_at_arclength(arc, 1.5), OutOfRange);
    REQUIRE_THROWS_AS(point_at_arclength(arc, -0.1), OutOfRange);
}

TEST_CASE("diameter") {
    PolyCurve sq = make_loop({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    auto d = diameter(sq);
    REQUIRE(d.value == Catch::Approx(std::sqrt(2.0)));

    PolyCurve digon = make_loop({{-1, 0}, {1, 0}});
    REQUIRE(diameter(digon).value == Catch::Approx(2.0));

    auto tref = sample_uniform(torus_knot_curve(2, 3), 200).polygon;
    double brute = 0;
    for (std::size_t i = 0; i < tref.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < tref.vertex_count(); ++j)
            brute = std::max(brute, dist(tref.vertices[i], tref.vertices[j]));
    REQUIRE(diameter(tref).value == brute);
}

TEST_CASE("discrete frechet basics") {
    auto a = sample_uniform(circle_curve(), 20).polygon;
    REQUIRE(discrete_frechet(a, a) == 0.0);

    PolyCurve b = a;
    for (auto& v : b.vertices) { v[0] += 3.0; v[1] += 4.0; }
    REQUIRE(discrete_frechet(a, b) == Catch::Approx(5.0).margin(1e-12));

    PolyCurve c3 = make_arc({{0, 0, 0}, {1, 1, 1}});
    REQUIRE_THROWS_AS(discrete_frechet(a, c3), DimensionMismatch);
}

TEST_CASE("discrete frechet matches brute-force couplings (n <= 8)") {
    RngStream rng(42);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + int(rng.next_u64() % 7);
        int m = 2 + int(rng.next_u64() % 7);
        PolyCurve a = random_curve(rng, 2, n, false);
        PolyCurve b = random_curve(rng, 2, m, false);
        double got = discrete_frechet(a, b);
        double ref = frechet_brute(a.vertices, b.vertices, n - 1, m - 1);
        REQUIRE(got == Catch::Approx(ref).margin(1e-13));
    }
}

TEST_CASE("discrete frechet symmetry and triangle inequality") {
    RngStream rng(7);
    for (int t = 0; t < 50; ++t) {
        PolyCurve a = random_curve(rng, 3, 5, false);
        PolyCurve b = random_curve(rng, 3, 6, false);
        PolyCurve c = random_curve(rng, 3, 4, false);
        double ab = discrete_frechet(a, b);
        double ba = discrete_frechet(b, a);
        REQUIRE(ab == Catch::Approx(ba).margin(1e-13));
        REQUIRE(ab <= discrete_frechet(a, c) + discrete_frechet(c, b) + 1e-12);
    }
}

TEST_CASE("vertex insertion never decreases length") {
    RngStream rng(99);
    for (int t = 0; t < 100; ++t) {
        PolyCurve c = random_curve(rng, 3, 6, t % 2 == 0);
        double L = length(c);
        // insert a point of the carrier into an edge
        std::size_t e = rng.next_u64() % c.edge_count();
        double u = rng.uniform();
        Vec p = lerp(c.vertices[e], c.vertices[(e + 1) % c.vertex_count()], u);
        PolyCurve r = c;
        r.vertices.insert(r.vertices.begin() + long(e) + 1, p);
        REQUIRE(length(r) >= L - 1e-12);
        // replacing the inserted point by any other point can only lengthen
        r.vertices[e + 1] = rng.gaussian_vec(3);
        REQUIRE(length(r) >= L - 1e-12);
    }
}

TEST_CASE("inscribed circle length converges monotonically") {
    double prev = 0;
    for (int n = 8; n <= 1024; n *= 2) {
        double L = length(sample_uniform(circle_curve(), n).polygon);
        REQUIRE(L > prev);
        prev = L;
    }
    double L100 = length(sample_uniform(circle_curve(), 100).polygon);
    REQUIRE(std::abs(L100 - kTwoPi) <= 2e-3);
    REQUIRE(curve_length(circle_curve()) == Catch::Approx(kTwoPi).margin(1e-7));
}
