#pragma once

// Integral geometry: random projection plans on the Grassmannian, projected
// total curvature, Monte-Carlo Crofton estimators and bridge-style height
// analysis.  Every estimator is a deterministic function of (inputs, seed, n).

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ftc/curvature.hpp"
#include "ftc/rng.hpp"

namespace ftc {

struct ProjectionPlan {
    int d = 0;
    int k = 0;
    std::vector<Vec> basis;  // k orthonormal vectors in E^d
};

struct MonteCarloEstimate {
    double mean = 0;
    double stderr_ = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
};

namespace detail {

inline MonteCarloEstimate summarize(const std::vector<double>& xs,
                                    std::uint64_t seed, double factor = 1.0) {
    MonteCarloEstimate e;
    e.n = xs.size();
    e.seed = seed;
    bool constant = true;
    for (double x : xs)
        if (x != xs.front()) { constant = false; break; }
    if (constant) {  // exact: a cusp arc projects to a cusp in every direction
        e.mean = factor * xs.front();
        e.stderr_ = 0.0;
        return e;
    }
    double m = 0;
    for (double x : xs) m += x;
    m /= double(xs.size());
    double var = 0;
    for (double x : xs) var += (x - m) * (x - m);
    var /= double(xs.size() - 1);
    e.mean = factor * m;
    e.stderr_ = factor * std::sqrt(var / double(xs.size()));
    return e;
}

// Gram-Schmidt a fresh gaussian d x k frame; retries on near-degeneracy.
inline ProjectionPlan gaussian_plan(int d, int k, std::uint64_t seed,
                                    std::uint64_t index, std::uint64_t retry) {
    for (std::uint64_t att = retry; att < retry + 64; ++att) {
        RngStream rng(seed, index, att);
        std::vector<Vec> cols;
        bool ok = true;
        for (int j = 0; j < k && ok; ++j) {
            Vec v = rng.gaussian_vec(d);
            for (const auto& u : cols) axpy(-dot(u, v), u, v);
            double nv = norm(v);
            if (nv < 1e-8) { ok = false; break; }
            cols.push_back(scale(v, 1.0 / nv));
        }
        if (ok) return ProjectionPlan{d, k, std::move(cols)};
    }
    throw BadDims("failed to sample an orthonormal frame");
}

} // namespace detail

inline std::vector<ProjectionPlan> sample_grassmannian(int d, int k,
                                                       std::uint64_t seed,
                                                       std::size_t n) {
    if (k < 1 || k >= d) throw BadDims("need 1 <= k < d");
    if (n < 1) throw BadDims("need n >= 1");
    std::vector<ProjectionPlan> plans;
    plans.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        plans.push_back(detail::gaussian_plan(d, k, seed, i, 0));
    return plans;
}

// Coordinates of the curve in the plan basis, welded (a projection can
// collapse consecutive vertices).  Throws DegenerateCurve if everything
// collapses.
inline PolyCurve project(const PolyCurve& c, const ProjectionPlan& p) {
    if (c.dim != p.d) throw DimensionMismatch("project: dimension mismatch");
    std::vector<Vec> vs;
    vs.reserve(c.vertex_count());
    for (const auto& v : c.vertices) {
        Vec w(p.k);
        for (int j = 0; j < p.k; ++j) w[j] = dot(v, p.basis[j]);
        vs.push_back(std::move(w));
    }
    PolyCurve r;
    r.dim = p.k;
    r.topology = c.topology;
    r.vertices = std::move(vs);
    return normalize(r);
}

namespace detail {

// Cyclic height sequence with plateaus collapsed to single entries.
inline std::vector<double> collapsed_heights(const PolyCurve& c, const Vec& dir) {
    std::vector<double> h;
    h.reserve(c.vertex_count());
    for (const auto& v : c.vertices) h.push_back(dot(v, dir));
    double lo = h[0], hi = h[0];
    for (double x : h) { lo = std::min(lo, x); hi = std::max(hi, x); }
    double tol = 1e-12 * std::max(1.0, hi - lo);
    if (hi - lo <= tol) throw DegenerateDirection("all heights equal");
    std::vector<double> runs;
    for (double x : h) {
        if (runs.empty() || std::abs(runs.back() - x) > tol) runs.push_back(x);
    }
    while (runs.size() > 1 && std::abs(runs.front() - runs.back()) <= tol)
        runs.pop_back();
    if (runs.size() < 2) throw DegenerateDirection("single plateau");
    return runs;
}

} // namespace detail

inline int count_local_maxima(const PolyCurve& c, const Vec& dir) {
    if (!c.closed()) throw PreconditionFailed("local maxima count needs a loop");
    auto runs = detail::collapsed_heights(c, dir);
    const std::size_t n = runs.size();
    int maxima = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double prev = runs[(i + n - 1) % n], next = runs[(i + 1) % n];
        if (runs[i] > prev && runs[i] > next) ++maxima;
    }
    if (maxima == 0) throw DegenerateDirection("no strict maximum found");
    return maxima;
}

// Total curvature of the projection of a loop to the line in direction dir:
// 2*pi times the number of strict local maxima of the height function.
inline double tc_line_projection(const PolyCurve& c, const Vec& dir) {
    return 2.0 * kPi * count_local_maxima(c, dir);
}

// Monte-Carlo average of TC over random k-plane projections; converges to
// TC(c) by the projection-average theorem.
inline MonteCarloEstimate tc_projection_average(const PolyCurve& curve, int k,
                                                std::uint64_t seed,
                                                std::size_t n) {
    PolyCurve c = normalize(curve);
    if (k < 1 || k >= c.dim) throw BadDims("need 1 <= k < dim");
    if (n < 2) throw BadDims("need n >= 2");
    std::vector<double> vals;
    vals.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double v = 0;
        bool got = false;
        for (std::uint64_t retry = 0; retry < 64 && !got; ++retry) {
            auto plan = detail::gaussian_plan(c.dim, k, seed, i, retry * 64);
            try {
                if (k == 1 && c.closed()) {
                    v = tc_line_projection(c, plan.basis[0]);
                } else {
                    v = total_curvature(project(c, plan));
                }
                got = true;
            } catch (const DegenerateDirection&) {
            } catch (const DegenerateCurve&) {
            }
        }
        if (!got) throw DegenerateDirection("could not find a generic projection");
        vals.push_back(v);
    }
    return detail::summarize(vals, seed);
}

// Cauchy/Crofton: length of a plane curve = pi/2 times the average length of
// its projections to lines.
inline MonteCarloEstimate crofton_length_estimate(const PolyCurve& c,
                                                  std::uint64_t seed,
                                                  std::size_t n) {
    if (c.dim != 2) throw BadDims("crofton length estimate needs dim 2");
    if (n < 2) throw BadDims("need n >= 2");
    std::vector<Vec> edges;
    for (std::size_t i = 0; i < c.edge_count(); ++i)
        edges.push_back(c.edge_vector(i));
    std::vector<double> vals;
    vals.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        RngStream rng(seed, i);
        Vec u = rng.unit_vec(2);
        double s = 0;
        for (const auto& e : edges) s += std::abs(dot(e, u));
        vals.push_back(s);
    }
    return detail::summarize(vals, seed, kPi / 2.0);
}

// Spherical Crofton: TC = pi times the average number of transversal
// crossings of the tantrix with random great hyperspheres.  Tantrix gaps of
// length pi (cusps: antipodal tangents) are split at a geodesic midpoint,
// which preserves the expected crossing count.
inline MonteCarloEstimate spherical_crofton_tc(const PolyCurve& curve,
                                               std::uint64_t seed,
                                               std::size_t n) {
    PolyCurve c = normalize(curve);
    if (c.dim < 2) throw BadDims("spherical crofton needs dim >= 2");
    if (n < 2) throw BadDims("need n >= 2");
    Tantrix t = tantrix(c);
    std::vector<std::pair<Vec, Vec>> arcs;
    for (std::size_t j = 0; j < t.gap_count(); ++j) {
        const Vec& a = t.points[j];
        const Vec& b = t.points[(j + 1) % t.points.size()];
        if (t.gap_length(j) > kPi - 1e-9) {
            Vec m = any_orthogonal(a);  // midpoint of one minimizing great circle
            arcs.emplace_back(a, m);
            arcs.emplace_back(m, b);
        } else {
            arcs.emplace_back(a, b);
        }
    }
    std::vector<double> vals;
    vals.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        RngStream rng(seed, i);
        Vec u = rng.unit_vec(c.dim);
        int crossings = 0;
        for (const auto& [a, b] : arcs)
            if (dot(a, u) * dot(b, u) < 0) ++crossings;
        vals.push_back(double(crossings));
    }
    return detail::summarize(vals, seed, kPi);
}

struct BridgeResult {
    int min_maxima = 0;
    Vec direction;
    bool certified_unknotted = false;  // some direction with exactly one maximum
};

// Minimum local-maxima count over n sampled directions.  A direction with a
// single maximum certifies the loop unknotted (Milnor's height argument).
inline BridgeResult bridge_estimate(const PolyCurve& curve, std::uint64_t seed,
                                    std::size_t n) {
    PolyCurve c = normalize(curve);
    if (!c.closed()) throw PreconditionFailed("bridge estimate needs a loop");
    BridgeResult r;
    r.min_maxima = -1;
    for (std::size_t i = 0; i < n; ++i) {
        RngStream rng(seed, i);
        Vec u = rng.unit_vec(c.dim);
        try {
            int m = count_local_maxima(c, u);
            if (r.min_maxima < 0 || m < r.min_maxima) {
                r.min_maxima = m;
                r.direction = u;
            }
        } catch (const DegenerateDirection&) {
            // skip non-generic directions
        }
    }
    if (r.min_maxima < 0) throw DegenerateDirection("no generic direction sampled");
    r.certified_unknotted = (r.min_maxima == 1);
    return r;
}

struct PythagorasReport {
    double a = 0, b = 0, L = 0;
    bool holds = false;
};

// Lengths of the coordinate-split projections satisfy a^2 + b^2 <= L^2.
inline PythagorasReport projection_pythagoras_check(const PolyCurve& c, int m) {
    if (m < 1 || m >= c.dim) throw BadDims("need 1 <= m < dim");
    PythagorasReport r;
    for (std::size_t i = 0; i < c.edge_count(); ++i) {
        Vec e = c.edge_vector(i);
        double ea = 0, eb = 0;
        for (int j = 0; j < m; ++j) ea += e[j] * e[j];
        for (int j = m; j < c.dim; ++j) eb += e[j] * e[j];
        r.a += std::sqrt(ea);
        r.b += std::sqrt(eb);
        r.L += std::sqrt(ea + eb);
    }
    r.holds = r.a * r.a + r.b * r.b <= r.L * r.L + 1e-9;
    return r;
}

} // namespace ftc
