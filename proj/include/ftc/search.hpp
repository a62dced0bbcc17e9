#pragma once

// Direction searches backed by existence theorems: interleaved bitangent
// slabs and the L/pi cylinder.  Heuristic optimizers; failure is reported as
// "not found at this budget", never as a counterexample.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ftc/curve.hpp"
#include "ftc/curvature.hpp"
#include "ftc/enclosing_ball.hpp"
#include "ftc/rng.hpp"

namespace ftc {

struct SlabResult {
    Vec direction;
    double thickness = 0;
    double defect = 0;
    // Arclength locations in cyclic order a1, a2, b1, b2 (near-max, near-min,
    // near-max, near-min).
    double a1 = 0, a2 = 0, b1 = 0, b2 = 0;
};

namespace detail {

// True if delta-near-max and delta-near-min vertices alternate max,min,max,min
// cyclically; writes representative vertex indices when found.
inline bool interleaving_ok(const std::vector<double>& h, double delta,
                            std::size_t wit[4]) {
    double hmax = *std::max_element(h.begin(), h.end());
    double hmin = *std::min_element(h.begin(), h.end());
    if (hmax - hmin <= 2.0 * delta) {
        // Everything is within delta of both extremes.
        if (h.size() < 4) return false;
        std::size_t n = h.size();
        wit[0] = 0; wit[1] = n / 4; wit[2] = n / 2; wit[3] = (3 * n) / 4;
        return true;
    }
    const std::size_t n = h.size();
    // tokens: +1 near max, -1 near min, 0 otherwise
    std::vector<int> tok(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (h[i] >= hmax - delta) tok[i] = 1;
        else if (h[i] <= hmin + delta) tok[i] = -1;
    }
    // collapse to cyclic runs of nonzero tokens
    std::vector<std::pair<int, std::size_t>> runs;  // (token, representative)
    for (std::size_t i = 0; i < n; ++i) {
        if (tok[i] == 0) continue;
        if (runs.empty() || runs.back().first != tok[i])
            runs.emplace_back(tok[i], i);
    }
    while (runs.size() > 1 && runs.front().first == runs.back().first)
        runs.pop_back();
    if (runs.size() < 4) return false;
    // runs alternate by construction; find max,min,max,min starting at a max
    std::size_t start = runs[0].first == 1 ? 0 : 1;
    if (start + 3 >= runs.size()) return false;
    for (int k = 0; k < 4; ++k) wit[k] = runs[start + k].second;
    return true;
}

// Smallest delta admitting an interleaved witness, by scanning the sorted
// critical gap values (the predicate need not be monotone in delta).
inline double interleaving_defect(const std::vector<double>& h,
                                  std::size_t wit[4]) {
    double hmax = *std::max_element(h.begin(), h.end());
    double hmin = *std::min_element(h.begin(), h.end());
    std::vector<double> crits;
    crits.push_back(0.0);
    for (double x : h) {
        crits.push_back(hmax - x);
        crits.push_back(x - hmin);
    }
    std::sort(crits.begin(), crits.end());
    crits.erase(std::unique(crits.begin(), crits.end()), crits.end());
    for (double d : crits)
        if (interleaving_ok(h, d, wit)) return d;
    return hmax - hmin;  // unreachable: full range always admits a witness
}

inline std::vector<double> heights(const PolyCurve& c, const Vec& dir) {
    std::vector<double> h;
    h.reserve(c.vertex_count());
    for (const auto& v : c.vertices) h.push_back(dot(v, dir));
    return h;
}

// Generic local refinement: shrinking random perturbations of a direction.
template <class F>
inline void refine_direction(F&& objective, Vec& best_dir, double& best_val,
                             std::uint64_t seed, int stages = 48,
                             int proposals = 16) {
    RngStream rng(seed, 0xD1Full);
    double sigma = 0.3;
    for (int s = 0; s < stages; ++s) {
        for (int p = 0; p < proposals; ++p) {
            Vec cand = best_dir;
            Vec g = rng.gaussian_vec(int(best_dir.size()));
            axpy(sigma, g, cand);
            double n = norm(cand);
            if (n < 1e-12) continue;
            cand = scale(cand, 1.0 / n);
            double val = objective(cand);
            if (val < best_val) {
                best_val = val;
                best_dir = cand;
            }
        }
        sigma *= 0.65;
    }
}

// Deterministic polish: compass search over the tangent directions of the
// sphere with shrinking step; converges even at nonsmooth minima.
template <class F>
inline void pattern_refine(F&& objective, Vec& best_dir, double& best_val,
                           double step0 = 0.1, double step_min = 1e-10) {
    for (double step = step0; step > step_min; step *= 0.5) {
        bool improved = true;
        while (improved) {
            improved = false;
            auto basis = complement_basis(best_dir);
            for (const auto& b : basis) {
                for (double s : {step, -step}) {
                    Vec cand = best_dir;
                    axpy(s, b, cand);
                    cand = scale(cand, 1.0 / norm(cand));
                    double val = objective(cand);
                    if (val < best_val) {
                        best_val = val;
                        best_dir = cand;
                        improved = true;
                    }
                }
            }
        }
    }
}

} // namespace detail

// Minimize the interleaving defect over directions; the Borsuk/Ulam argument
// guarantees a zero-defect direction exists for every loop in d >= 3.
inline SlabResult interleaved_slab_search(const PolyCurve& input, double eps,
                                          std::uint64_t seed, std::size_t n) {
    PolyCurve c = normalize(input);
    if (!c.closed()) throw PreconditionFailed("slab search needs a loop");
    if (c.dim < 3) throw BadDims("slab search needs d >= 3");
    double diam = diameter(c).value;
    auto cum = arclength_table(c);

    std::size_t wit[4] = {0, 0, 0, 0};
    auto objective = [&](const Vec& v) {
        std::size_t w[4];
        return detail::interleaving_defect(detail::heights(c, v), w);
    };

    Vec best_dir;
    double best = -1;
    for (std::size_t i = 0; i < n; ++i) {
        RngStream rng(seed, i);
        Vec v = rng.unit_vec(c.dim);
        double val = objective(v);
        if (best < 0 || val < best) { best = val; best_dir = v; }
    }
    detail::refine_direction(objective, best_dir, best, seed);
    detail::pattern_refine(objective, best_dir, best);

    auto h = detail::heights(c, best_dir);
    double defect = detail::interleaving_defect(h, wit);
    if (defect > eps * diam)
        throw SearchFailed("no interleaved slab found at this budget; best defect " +
                           std::to_string(defect));
    SlabResult r;
    r.direction = best_dir;
    r.defect = defect;
    double hmax = *std::max_element(h.begin(), h.end());
    double hmin = *std::min_element(h.begin(), h.end());
    r.thickness = hmax - hmin;
    r.a1 = cum[wit[0]];
    r.a2 = cum[wit[1]];
    r.b1 = cum[wit[2]];
    r.b2 = cum[wit[3]];
    return r;
}

struct CylinderResult {
    Vec axis;
    Vec center;       // a point on the cylinder axis in E^d
    double radius = 0;
    double bound = 0;  // L / pi
    bool holds = false;
};

// Search for a cylinder of small diameter containing the loop.  The theorem
// guarantees some axis achieves diameter <= L/pi; for d = 2 the "cylinder"
// degenerates to a slab of that width.
inline CylinderResult cylinder_search(const PolyCurve& input,
                                      std::uint64_t seed, std::size_t n) {
    PolyCurve c = normalize(input);
    if (!c.closed()) throw PreconditionFailed("cylinder search needs a loop");
    if (c.dim < 2) throw BadDims("cylinder search needs d >= 2");
    const double L = length(c);

    auto project_pts = [&](const Vec& axis) {
        auto basis = complement_basis(axis);
        std::vector<Vec> pts;
        pts.reserve(c.vertex_count());
        for (const auto& v : c.vertices) {
            Vec p(basis.size());
            for (std::size_t j = 0; j < basis.size(); ++j)
                p[j] = dot(v, basis[j]);
            pts.push_back(std::move(p));
        }
        return pts;
    };
    auto objective = [&](const Vec& axis) {
        auto pts = project_pts(axis);
        return 2.0 * min_enclosing_ball(pts, c.dim - 1).radius;
    };

    Vec best_dir;
    double best = -1;
    for (std::size_t i = 0; i < n; ++i) {
        RngStream rng(seed, i);
        Vec v = rng.unit_vec(c.dim);
        double val = objective(v);
        if (best < 0 || val < best) { best = val; best_dir = v; }
    }
    detail::refine_direction(objective, best_dir, best, seed, 24, 16);
    detail::pattern_refine(objective, best_dir, best);

    auto basis = complement_basis(best_dir);
    Ball ball = min_enclosing_ball(project_pts(best_dir), c.dim - 1);
    CylinderResult r;
    r.axis = best_dir;
    r.center = Vec(c.dim, 0.0);
    for (std::size_t j = 0; j < basis.size(); ++j)
        axpy(ball.center[j], basis[j], r.center);
    r.radius = ball.radius;
    r.bound = L / kPi;
    r.holds = 2.0 * ball.radius <= r.bound + 1e-6;
    return r;
}

} // namespace ftc
