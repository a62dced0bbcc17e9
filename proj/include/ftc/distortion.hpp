#pragma once

// Gromov distortion of a polygonal carrier: sup of arclength over chord
// length across all point pairs, including corner-limit pairs delta(r,r) =
// sec(theta/2).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ftc/curvature.hpp"

namespace ftc {

enum class DistortionKind { InteriorPair, CornerLimit };

struct DistortionResult {
    double value = 1.0;
    double s1 = 0, s2 = 0;  // arclength locations (equal for a corner pair)
    DistortionKind kind = DistortionKind::InteriorPair;
};

namespace detail {

struct DistortionContext {
    const PolyCurve* c;
    std::vector<double> cum;  // arclength at each vertex
    double L;
    double scale;
    bool closed;

    double arcdist(double s, double t) const {
        double d = std::abs(s - t);
        return closed ? std::min(d, L - d) : d;
    }

    // delta at arclengths (s,t) with precomputed points p,q.
    double ratio(double s, double t, const Vec& p, const Vec& q) const {
        double chord = dist(p, q);
        double arc = arcdist(s, t);
        if (chord <= 1e-12 * scale) {
            if (arc > 1e-9 * L)
                throw InfiniteDistortion("coincident points at distinct arclengths");
            return 0.0;  // genuinely the same point; corners handled separately
        }
        return arc / chord;
    }

    double eval_edges(std::size_t i, std::size_t j, double u, double v) const {
        const auto& vs = c->vertices;
        const std::size_t n = vs.size();
        Vec p = lerp(vs[i], vs[(i + 1) % n], u);
        Vec q = lerp(vs[j], vs[(j + 1) % n], v);
        double s = cum[i] + u * (cum[i + 1] - cum[i]);
        double t = cum[j] + v * (cum[j + 1] - cum[j]);
        return ratio(s, t, p, q);
    }
};

// Maximize f over [lo,hi] by golden-section (f unimodal near the optimum).
template <class F>
inline double golden_max(F&& f, double lo, double hi, double tol) {
    const double phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + phi * (b - a); f2 = f(x2);
        } else {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - phi * (b - a); f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

} // namespace detail

inline DistortionResult distortion(const PolyCurve& input) {
    PolyCurve c = normalize(input);
    detail::DistortionContext ctx;
    ctx.c = &c;
    ctx.cum = arclength_table(c);
    ctx.L = ctx.cum.back();
    if (ctx.L <= 0) throw DegenerateCurve("distortion needs positive length");
    ctx.scale = diameter(c).value;
    if (ctx.scale <= 0) throw DegenerateCurve("distortion needs positive diameter");
    ctx.closed = c.closed();

    const std::size_t ne = c.edge_count();

    // Coarse 16x16 scan of every edge pair; keep the best cell per pair.
    struct Cand {
        std::size_t i, j;
        double u, v, val;
    };
    std::vector<Cand> cands;
    cands.reserve(ne * (ne + 1) / 2);
    const int G = 16;
    for (std::size_t i = 0; i < ne; ++i) {
        for (std::size_t j = i; j < ne; ++j) {
            Cand best{i, j, 0, 0, -1.0};
            for (int a = 0; a <= G; ++a) {
                double u = double(a) / G;
                for (int b = 0; b <= G; ++b) {
                    double v = double(b) / G;
                    double r = ctx.eval_edges(i, j, u, v);
                    if (r > best.val) { best.u = u; best.v = v; best.val = r; }
                }
            }
            if (best.val > 0) cands.push_back(best);
        }
    }
    std::sort(cands.begin(), cands.end(),
              [](const Cand& a, const Cand& b) { return a.val > b.val; });
    if (cands.size() > 48) cands.resize(48);

    DistortionResult res;
    res.value = 1.0;
    res.s1 = 0.0;
    res.s2 = ctx.cum[1];  // endpoints of the first edge realize delta = 1

    // Coordinate-wise golden-section refinement of the leading cells.
    const double cell = 1.0 / G;
    for (const auto& cd : cands) {
        double u = cd.u, v = cd.v;
        for (int round = 0; round < 4; ++round) {
            double hw = cell / std::pow(4.0, round);
            u = detail::golden_max(
                [&](double x) { return ctx.eval_edges(cd.i, cd.j, x, v); },
                std::max(0.0, u - hw), std::min(1.0, u + hw), 1e-10);
            v = detail::golden_max(
                [&](double y) { return ctx.eval_edges(cd.i, cd.j, u, y); },
                std::max(0.0, v - hw), std::min(1.0, v + hw), 1e-10);
        }
        double val = ctx.eval_edges(cd.i, cd.j, u, v);
        if (val > res.value) {
            res.value = val;
            res.s1 = ctx.cum[cd.i] + u * (ctx.cum[cd.i + 1] - ctx.cum[cd.i]);
            res.s2 = ctx.cum[cd.j] + v * (ctx.cum[cd.j + 1] - ctx.cum[cd.j]);
            res.kind = DistortionKind::InteriorPair;
        }
    }

    // Corner-limit candidates sec(theta/2); a cusp makes the sup infinite.
    auto th = turning_angles(c);
    for (std::size_t k = 0; k < th.size(); ++k) {
        std::size_t vi = interior_vertex_index(c, k);
        if (th[k] >= kPi - kCuspTol)
            throw InfiniteDistortion("cusp at vertex " + std::to_string(vi));
        double cand = 1.0 / std::cos(th[k] / 2.0);
        if (cand > res.value) {
            res.value = cand;
            res.s1 = res.s2 = ctx.cum[vi];
            res.kind = DistortionKind::CornerLimit;
        }
    }
    return res;
}

struct ArcDistortionReport {
    double distortion_value = 0;
    double alpha = 0;
    double bound = 0;  // sec(alpha/2)
    bool holds = false;
};

inline ArcDistortionReport distortion_arc_bound_check(const PolyCurve& arc) {
    if (arc.closed())
        throw PreconditionFailed("arc distortion bound needs an arc");
    double alpha = total_curvature(arc);
    if (alpha >= kPi)
        throw PreconditionFailed("bound requires TC < pi");
    ArcDistortionReport r;
    r.alpha = alpha;
    r.bound = 1.0 / std::cos(alpha / 2.0);
    r.distortion_value = distortion(arc).value;
    r.holds = r.distortion_value <= r.bound + 1e-9;
    return r;
}

} // namespace ftc
