#pragma once

// Polygonal curves in E^d: the universal input type, with length,
// arclength lookup, diameter and discrete Frechet distance.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "ftc/errors.hpp"
#include "ftc/vec.hpp"

namespace ftc {

enum class Topology { Arc, Loop };

struct PolyCurve {
    int dim = 0;
    Topology topology = Topology::Arc;
    std::vector<Vec> vertices;

    bool closed() const { return topology == Topology::Loop; }
    std::size_t vertex_count() const { return vertices.size(); }

    // Number of edges; for a loop the closing edge is included.
    std::size_t edge_count() const {
        return closed() ? vertices.size() : vertices.size() - 1;
    }

    Vec edge_vector(std::size_t i) const {
        return sub(vertices[(i + 1) % vertices.size()], vertices[i]);
    }
};

inline PolyCurve make_arc(std::vector<Vec> vs) {
    PolyCurve c;
    if (vs.size() < 2) throw DegenerateCurve("arc needs at least 2 vertices");
    c.dim = int(vs[0].size());
    c.topology = Topology::Arc;
    c.vertices = std::move(vs);
    for (auto& v : c.vertices)
        if (int(v.size()) != c.dim) throw DimensionMismatch("mixed vertex dimensions");
    return c;
}

inline PolyCurve make_loop(std::vector<Vec> vs) {
    PolyCurve c;
    if (vs.size() < 2) throw DegenerateCurve("loop needs at least 2 vertices");
    c.dim = int(vs[0].size());
    c.topology = Topology::Loop;
    c.vertices = std::move(vs);
    for (auto& v : c.vertices)
        if (int(v.size()) != c.dim) throw DimensionMismatch("mixed vertex dimensions");
    return c;
}

// Collapse runs of consecutive equal vertices (distance <= weld_eps; the
// default is exact equality).  For loops the wrap-around pair is welded too.
inline PolyCurve normalize(const PolyCurve& c, double weld_eps = 0.0) {
    std::vector<Vec> out;
    out.reserve(c.vertices.size());
    for (const auto& v : c.vertices) {
        if (out.empty() || dist(out.back(), v) > weld_eps) out.push_back(v);
    }
    if (c.closed()) {
        while (out.size() > 1 && dist(out.front(), out.back()) <= weld_eps)
            out.pop_back();
    }
    if (out.size() < 2)
        throw DegenerateCurve("curve degenerates to a point after welding");
    PolyCurve r;
    r.dim = c.dim;
    r.topology = c.topology;
    r.vertices = std::move(out);
    return r;
}

inline bool is_normalized(const PolyCurve& c, double weld_eps = 0.0) {
    for (std::size_t i = 0; i < c.edge_count(); ++i)
        if (norm(c.edge_vector(i)) <= weld_eps) return false;
    return true;
}

inline double length(const PolyCurve& c) {
    double L = 0;
    for (std::size_t i = 0; i < c.edge_count(); ++i) L += norm(c.edge_vector(i));
    return L;
}

// Cumulative arclength at each vertex; size vertex_count()+1 for loops
// (last entry = total length) and vertex_count() for arcs.
inline std::vector<double> arclength_table(const PolyCurve& c) {
    std::vector<double> s;
    s.reserve(c.vertex_count() + 1);
    s.push_back(0.0);
    for (std::size_t i = 0; i < c.edge_count(); ++i)
        s.push_back(s.back() + norm(c.edge_vector(i)));
    return s;
}

inline Vec point_at_arclength(const PolyCurve& c, double s) {
    auto tab = arclength_table(c);
    double L = tab.back();
    if (c.closed()) {
        s = std::fmod(s, L);
        if (s < 0) s += L;
    } else if (s < 0.0 || s > L) {
        throw OutOfRange("arclength outside [0, length] on an arc");
    }
    auto it = std::upper_bound(tab.begin(), tab.end(), s);
    std::size_t i = (it == tab.begin()) ? 0 : std::size_t(it - tab.begin() - 1);
    if (i >= c.edge_count()) i = c.edge_count() - 1;
    double seg = tab[i + 1] - tab[i];
    double t = seg > 0 ? (s - tab[i]) / seg : 0.0;
    const Vec& a = c.vertices[i];
    const Vec& b = c.vertices[(i + 1) % c.vertex_count()];
    return lerp(a, b, t);
}

struct DiameterResult {
    double value = 0;
    std::size_t i = 0, j = 0;
};

// Exact O(n^2) scan; the diameter of a polygon is attained at vertices.
inline DiameterResult diameter(const PolyCurve& c) {
    DiameterResult r;
    for (std::size_t i = 0; i + 1 < c.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < c.vertex_count(); ++j) {
            double d = dist(c.vertices[i], c.vertices[j]);
            if (d > r.value) { r.value = d; r.i = i; r.j = j; }
        }
    return r;
}

// Discrete Frechet distance over monotone vertex couplings (dog-leash
// distance restricted to vertices), by the standard dynamic program.
inline double discrete_frechet(const PolyCurve& a, const PolyCurve& b) {
    if (a.dim != b.dim) throw DimensionMismatch("discrete_frechet: dim mismatch");
    const auto& p = a.vertices;
    const auto& q = b.vertices;
    const std::size_t n = p.size(), m = q.size();
    std::vector<double> prev(m), cur(m);
    for (std::size_t j = 0; j < m; ++j) {
        double d = dist(p[0], q[j]);
        prev[j] = (j == 0) ? d : std::max(prev[j - 1], d);
    }
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double d = dist(p[i], q[j]);
            double best = prev[j];
            if (j > 0) best = std::min(best, std::min(prev[j - 1], cur[j - 1]));
            cur[j] = std::max(best, d);
        }
        std::swap(prev, cur);
    }
    return prev[m - 1];
}

} // namespace ftc
