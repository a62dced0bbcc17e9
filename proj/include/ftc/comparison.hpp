#pragma once

// Executable comparison theorems: Schur/Cauchy arm, Chakerian's packing
// bound, and Wienholtz's diameter-projection estimate.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ftc/curvature.hpp"

namespace ftc {

// Planar convex arc with the same edge-length sequence and per-vertex turning
// angles as the input, all turns to the left; unique up to rigid motion.
inline PolyCurve schur_flatten(const PolyCurve& arc) {
    if (arc.closed()) throw PreconditionFailed("schur_flatten needs an arc");
    PolyCurve c = normalize(arc);
    auto th = turning_angles(c);
    for (std::size_t k = 0; k < th.size(); ++k)
        if (th[k] >= kPi - kCuspTol)
            throw CuspError("schur_flatten: cusp at vertex " +
                            std::to_string(k + 1));
    std::vector<double> el;
    for (std::size_t i = 0; i < c.edge_count(); ++i)
        el.push_back(norm(c.edge_vector(i)));
    std::vector<Vec> vs;
    vs.push_back(Vec{0.0, 0.0});
    double heading = 0.0;
    for (std::size_t i = 0; i < el.size(); ++i) {
        Vec v = vs.back();
        v[0] += el[i] * std::cos(heading);
        v[1] += el[i] * std::sin(heading);
        vs.push_back(std::move(v));
        if (i < th.size()) heading += th[i];
    }
    return make_arc(std::move(vs));
}

namespace detail {

inline double ccw(const Vec& a, const Vec& b, const Vec& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

inline bool on_segment(const Vec& a, const Vec& b, const Vec& p) {
    return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
           std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

inline bool segments_intersect(const Vec& a, const Vec& b, const Vec& c,
                               const Vec& d) {
    double d1 = ccw(c, d, a), d2 = ccw(c, d, b);
    double d3 = ccw(a, b, c), d4 = ccw(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment(c, d, a)) return true;
    if (d2 == 0 && on_segment(c, d, b)) return true;
    if (d3 == 0 && on_segment(a, b, c)) return true;
    if (d4 == 0 && on_segment(a, b, d)) return true;
    return false;
}

inline bool polygon_simple(const PolyCurve& loop) {
    const std::size_t n = loop.edge_count();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            const Vec& a = loop.vertices[i];
            const Vec& b = loop.vertices[(i + 1) % n];
            const Vec& c = loop.vertices[j];
            const Vec& d = loop.vertices[(j + 1) % n];
            if (segments_intersect(a, b, c, d)) return false;
        }
    }
    return true;
}

} // namespace detail

// True iff the closed planar polygon (an arc is closed by its chord) is
// simple and all signed turning angles share one sign (zeros allowed).
inline bool convexity_check(const PolyCurve& input) {
    if (input.dim != 2) throw BadDims("convexity_check needs dim 2");
    PolyCurve loop;
    if (input.closed()) {
        loop = normalize(input);
    } else {
        PolyCurve tmp = input;
        tmp.topology = Topology::Loop;
        loop = normalize(tmp);
    }
    if (loop.vertex_count() < 3) return true;  // a doubled segment chord
    if (!detail::polygon_simple(loop)) return false;
    SignedTurning st;
    try {
        st = signed_turning_angles(loop);
    } catch (const AmbiguousSign&) {
        return false;  // a cusp is never convex
    }
    bool pos = false, neg = false;
    for (double a : st.angles) {
        if (a > 1e-12) pos = true;
        if (a < -1e-12) neg = true;
    }
    return !(pos && neg);
}

struct SchurReport {
    double chord_gamma = 0;
    double chord_bar = 0;
    bool holds = false;
};

namespace detail {

// Refine an arc by inserting vertices at the given arclengths (zero-turn
// insertions; geometry unchanged).
inline PolyCurve refine_at(const PolyCurve& arc, const std::vector<double>& sv) {
    double L = length(arc);
    std::vector<Vec> vs;
    for (double s : sv)
        vs.push_back(point_at_arclength(arc, std::clamp(s, 0.0, L)));
    PolyCurve r;
    r.dim = arc.dim;
    r.topology = Topology::Arc;
    r.vertices = std::move(vs);
    return normalize(r);
}

} // namespace detail

// Discrete Schur comparison.  Both inputs are arcs; they are refined to a
// common arclength partition, the hypotheses are verified (matched edge
// lengths, convex planar comparison arc, per-vertex angle dominance), and the
// endpoint chords are compared.
inline SchurReport schur_check(const PolyCurve& gamma_in,
                               const PolyCurve& bar_in, double tol = 1e-9) {
    if (gamma_in.closed() || bar_in.closed())
        throw PreconditionFailed("schur_check compares arcs");
    if (bar_in.dim != 2)
        throw PreconditionFailed("comparison arc must be planar");
    PolyCurve gamma = normalize(gamma_in);
    PolyCurve bar = normalize(bar_in);
    double L1 = length(gamma), L2 = length(bar);
    double s_tol = tol * std::max(1.0, std::max(L1, L2));
    if (std::abs(L1 - L2) > s_tol)
        throw PreconditionFailed("arcs have different lengths");

    // common partition
    auto t1 = arclength_table(gamma);
    auto t2 = arclength_table(bar);
    std::vector<double> sv;
    sv.reserve(t1.size() + t2.size());
    sv.insert(sv.end(), t1.begin(), t1.end());
    for (double s : t2) sv.push_back(std::min(s, L1));
    std::sort(sv.begin(), sv.end());
    sv.erase(std::unique(sv.begin(), sv.end(),
                         [&](double a, double b) { return b - a <= s_tol; }),
             sv.end());
    PolyCurve g = detail::refine_at(gamma, sv);
    PolyCurve b = detail::refine_at(bar, sv);
    if (g.vertex_count() != b.vertex_count())
        throw PreconditionFailed("could not build a common partition");
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (std::abs(norm(g.edge_vector(i)) - norm(b.edge_vector(i))) > s_tol)
            throw PreconditionFailed("edge length mismatch at edge " +
                                     std::to_string(i));
    if (!convexity_check(b))
        throw PreconditionFailed("comparison arc closed by its chord is not convex");
    auto thg = turning_angles(g);
    auto thb = turning_angles(b);
    for (std::size_t k = 0; k < thg.size(); ++k)
        if (thb[k] < thg[k] - 1e-9)
            throw PreconditionFailed("angle dominance fails at vertex " +
                                     std::to_string(k + 1));

    SchurReport r;
    r.chord_gamma = dist(g.vertices.front(), g.vertices.back());
    r.chord_bar = dist(b.vertices.front(), b.vertices.back());
    r.holds = r.chord_gamma >= r.chord_bar - 1e-9;
    return r;
}

// Rotate the sub-chain after edge `edge` about the line of that edge by
// `angle` (d = 3).  Preserves all edge lengths and turning angles; the
// canonical generator of Schur test pairs.
inline PolyCurve crankshaft_twist(const PolyCurve& arc, std::size_t edge,
                                  double angle) {
    if (arc.dim != 3) throw BadDims("crankshaft_twist needs dim 3");
    if (arc.closed()) throw PreconditionFailed("crankshaft_twist needs an arc");
    if (edge + 1 >= arc.edge_count())
        throw BadParams("no vertices after this edge");
    Vec axis = normalized(arc.edge_vector(edge));
    const Vec& origin = arc.vertices[edge];
    double c = std::cos(angle), s = std::sin(angle);
    PolyCurve out = arc;
    for (std::size_t i = edge + 2; i < arc.vertex_count(); ++i) {
        Vec v = sub(arc.vertices[i], origin);
        Vec kxv{axis[1] * v[2] - axis[2] * v[1],
                axis[2] * v[0] - axis[0] * v[2],
                axis[0] * v[1] - axis[1] * v[0]};
        double kv = dot(axis, v);
        Vec r = scale(v, c);
        axpy(s, kxv, r);
        axpy(kv * (1.0 - c), axis, r);
        out.vertices[i] = add(origin, r);
    }
    return out;
}

struct ChakerianReport {
    double len = 0;
    double tc_star = 0;
    double bound = 0;
    bool holds = false;
};

// Packing bound: a curve in the unit ball has Len <= TC* (+2 for arcs).
inline ChakerianReport chakerian_check(const PolyCurve& input) {
    for (std::size_t i = 0; i < input.vertex_count(); ++i)
        if (norm(input.vertices[i]) > 1.0 + 1e-12)
            throw NotInUnitBall("vertex " + std::to_string(i) +
                                " outside the unit ball");
    PolyCurve c = normalize(input);
    ChakerianReport r;
    r.len = length(c);
    r.tc_star = total_curvature_star(c);
    r.bound = c.closed() ? r.tc_star : 2.0 + r.tc_star;
    r.holds = r.len <= r.bound + 1e-9;
    return r;
}

struct Wien2Report {
    double L = 0;
    double projected_diameter = 0;
    double bound = 0;   // L / (2 sqrt 2)
    std::size_t p1 = 0, p2 = 0;  // vertex indices of the diameter pair
    bool holds = false;
};

// Project to the hyperplane orthogonal to the diameter chord; the projected
// diameter is at most L / (2 sqrt 2), sharp for a square.
inline Wien2Report wien2_check(const PolyCurve& input) {
    if (!input.closed()) throw PreconditionFailed("wien2_check needs a loop");
    PolyCurve c = normalize(input);
    auto diam = diameter(c);
    Vec dir = normalized(sub(c.vertices[diam.j], c.vertices[diam.i]));
    std::vector<Vec> proj;
    proj.reserve(c.vertex_count());
    for (const auto& v : c.vertices) {
        Vec p = v;
        axpy(-dot(v, dir), dir, p);
        proj.push_back(std::move(p));
    }
    Wien2Report r;
    r.p1 = diam.i;
    r.p2 = diam.j;
    r.L = length(c);
    for (std::size_t i = 0; i + 1 < proj.size(); ++i)
        for (std::size_t j = i + 1; j < proj.size(); ++j)
            r.projected_diameter = std::max(r.projected_diameter,
                                            dist(proj[i], proj[j]));
    r.bound = r.L / (2.0 * std::sqrt(2.0));
    r.holds = r.projected_diameter <= r.bound + 1e-9;
    return r;
}

} // namespace ftc
