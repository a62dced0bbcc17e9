#pragma once

// Inscribed-arc smoothing: replace each corner by the circular arc tangent to
// both incident edges, producing a tangent-continuous piecewise
// segment/circular-arc curve with the same total turning and smaller length.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ftc/curvature.hpp"

namespace ftc {

struct SmoothPiece {
    enum class Kind { Segment, Arc };
    Kind kind = Kind::Segment;
    Vec a, b;          // endpoints
    // Arc data: point(t) = center + radius*(cos(t)*u + sin(t)*w), t in [0,turn].
    Vec center, u, w;
    double radius = 0;
    double turn = 0;

    double piece_length() const {
        return kind == Kind::Segment ? dist(a, b) : radius * turn;
    }
    Vec start_tangent() const {
        if (kind == Kind::Arc) return w;
        return normalized(sub(b, a));
    }
    Vec end_tangent() const {
        if (kind == Kind::Segment) return normalized(sub(b, a));
        Vec t = scale(u, -std::sin(turn));
        axpy(std::cos(turn), w, t);
        return t;
    }
};

struct SmoothedCurve {
    std::vector<SmoothPiece> pieces;
    bool closed = false;
    double total_length = 0;
    double total_turning = 0;
};

namespace detail {

struct CornerArc {
    bool has_arc = false;
    Vec a, b;  // tangency points (equal to the vertex when there is no arc)
    SmoothPiece arc;
};

inline CornerArc make_corner_arc(const Vec& v, const Vec& t_prev, const Vec& t_next,
                                 double theta, double h, std::size_t vi) {
    CornerArc ca;
    if (theta >= kPi - kCuspTol)
        throw CuspError("cannot smooth a cusp (vertex " + std::to_string(vi) + ")");
    if (theta == 0.0) {
        ca.a = ca.b = v;
        return ca;
    }
    ca.has_arc = true;
    Vec a = v;
    axpy(-h, t_prev, a);
    Vec b = v;
    axpy(h, t_next, b);
    double r = h / std::tan(theta / 2.0);
    // Inward normal at the first tangency: the component of t_next
    // orthogonal to t_prev.
    Vec n = t_next;
    axpy(-dot(t_prev, t_next), t_prev, n);
    n = normalized(n);
    Vec center = a;
    axpy(r, n, center);
    SmoothPiece p;
    p.kind = SmoothPiece::Kind::Arc;
    p.a = a;
    p.b = b;
    p.center = center;
    p.radius = r;
    p.u = scale(n, -1.0);
    p.w = t_prev;
    p.turn = theta;
    ca.a = a;
    ca.b = b;
    ca.arc = p;
    return ca;
}

inline void push_segment(SmoothedCurve& sc, const Vec& a, const Vec& b) {
    // adjacent arcs can meet at a shared-edge midpoint up to rounding
    if (dist(a, b) <= 1e-12 * std::max(1.0, norm(a))) return;
    SmoothPiece p;
    p.kind = SmoothPiece::Kind::Segment;
    p.a = a;
    p.b = b;
    sc.pieces.push_back(p);
}

} // namespace detail

inline SmoothedCurve smooth_inscribed_arcs(const PolyCurve& input) {
    PolyCurve c = normalize(input);
    auto T = unit_tangents(c);
    auto th = turning_angles(c);
    const std::size_t m = c.edge_count();
    std::vector<double> el(m);
    for (std::size_t i = 0; i < m; ++i) el[i] = norm(c.edge_vector(i));

    SmoothedCurve sc;
    sc.closed = c.closed();
    std::vector<detail::CornerArc> corners;
    for (std::size_t k = 0; k < th.size(); ++k) {
        std::size_t vi = interior_vertex_index(c, k);
        std::size_t e_prev = c.closed() ? (vi + m - 1) % m : vi - 1;
        std::size_t e_next = c.closed() ? vi : vi;
        double h = 0.5 * std::min(el[e_prev], el[e_next]);
        corners.push_back(detail::make_corner_arc(c.vertices[vi], T[e_prev],
                                                  T[e_next], th[k], h, vi));
    }

    if (c.closed()) {
        const std::size_t n = corners.size();
        for (std::size_t k = 0; k < n; ++k) {
            if (corners[k].has_arc) sc.pieces.push_back(corners[k].arc);
            detail::push_segment(sc, corners[k].b, corners[(k + 1) % n].a);
        }
    } else {
        Vec cur = c.vertices.front();
        for (auto& ca : corners) {
            detail::push_segment(sc, cur, ca.a);
            if (ca.has_arc) sc.pieces.push_back(ca.arc);
            cur = ca.b;
        }
        detail::push_segment(sc, cur, c.vertices.back());
    }

    for (const auto& p : sc.pieces) {
        sc.total_length += p.piece_length();
        if (p.kind == SmoothPiece::Kind::Arc) sc.total_turning += p.turn;
    }
    return sc;
}

// Largest tangent-direction mismatch at the joints between consecutive
// pieces (cyclic for closed curves); the construction keeps this at
// rounding level.
inline double max_tangent_discontinuity(const SmoothedCurve& sc) {
    if (sc.pieces.size() < 2 && !sc.closed) return 0.0;
    double worst = 0.0;
    const std::size_t n = sc.pieces.size();
    std::size_t joints = sc.closed ? n : n - 1;
    for (std::size_t i = 0; i < joints; ++i) {
        Vec t0 = sc.pieces[i].end_tangent();
        Vec t1 = sc.pieces[(i + 1) % n].start_tangent();
        worst = std::max(worst, unit_angle(t0, t1));
    }
    return worst;
}

} // namespace ftc
