#pragma once

// Turning angles, total curvature TC and its euclidean variant TC*, the
// tantrix, the curvature force, curvature density models and the spindle
// containment predicate.

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ftc/curve.hpp"

namespace ftc {

inline constexpr double kPi = 3.14159265358979323846264338328;
inline constexpr double kCuspTol = 1e-9; // theta within this of pi counts as a cusp

// Unit tangent of each edge, in order.  Requires a normalized curve.
inline std::vector<Vec> unit_tangents(const PolyCurve& c) {
    std::vector<Vec> ts;
    ts.reserve(c.edge_count());
    for (std::size_t i = 0; i < c.edge_count(); ++i) {
        Vec e = c.edge_vector(i);
        double n = norm(e);
        if (n == 0) throw DegenerateCurve("zero edge; normalize the curve first");
        ts.push_back(scale(e, 1.0 / n));
    }
    return ts;
}

// Vertex index of the k-th interior vertex.  Loops: every vertex is interior
// (k = 0..n-1, angle between edges k-1 and k).  Arcs: k = 0..n-3 maps to
// vertex k+1, between edges k and k+1.
inline std::size_t interior_vertex_index(const PolyCurve& c, std::size_t k) {
    return c.closed() ? k : k + 1;
}

inline std::size_t interior_vertex_count(const PolyCurve& c) {
    return c.closed() ? c.vertex_count() : c.vertex_count() - 2;
}

// Turning angles at interior vertices, each in [0, pi].
inline std::vector<double> turning_angles(const PolyCurve& c) {
    if (!is_normalized(c))
        throw DegenerateCurve("turning_angles: curve has zero-length edges");
    auto T = unit_tangents(c);
    const std::size_t m = T.size();
    std::vector<double> th;
    if (c.closed()) {
        th.reserve(m);
        for (std::size_t i = 0; i < m; ++i)
            th.push_back(unit_angle(T[(i + m - 1) % m], T[i]));
    } else {
        th.reserve(m - 1);
        for (std::size_t i = 1; i < m; ++i)
            th.push_back(unit_angle(T[i - 1], T[i]));
    }
    return th;
}

struct SignedTurning {
    std::vector<double> angles;             // per interior vertex, in [-pi, pi]
    std::optional<int> turning_number;      // loops only
};

// Signed turning angles for planar curves.  The sign is ambiguous at a cusp
// (theta = pi), which is a typed error rather than a silent choice.
inline SignedTurning signed_turning_angles(const PolyCurve& c) {
    if (c.dim != 2) throw BadDims("signed turning angles need dim 2");
    auto th = turning_angles(c);
    auto T = unit_tangents(c);
    const std::size_t m = T.size();
    SignedTurning r;
    r.angles.reserve(th.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < th.size(); ++k) {
        if (th[k] >= kPi - kCuspTol)
            throw AmbiguousSign("signed turning angle undefined at cusp (vertex " +
                                std::to_string(interior_vertex_index(c, k)) + ")");
        std::size_t j = c.closed() ? (k + m - 1) % m : k;
        const Vec& u = T[j];
        const Vec& v = T[(j + 1) % m];
        double cross = u[0] * v[1] - u[1] * v[0];
        double phi = (cross >= 0) ? th[k] : -th[k];
        r.angles.push_back(phi);
        sum += phi;
    }
    if (c.closed())
        r.turning_number = int(std::lround(sum / (2.0 * kPi)));
    return r;
}

inline double total_curvature(const PolyCurve& c) {
    PolyCurve n = normalize(c);
    double tc = 0.0;
    for (double th : turning_angles(n)) tc += th;
    return tc;
}

inline double total_curvature_star(const PolyCurve& c) {
    double s = 0.0;
    for (double th : turning_angles(c)) s += 2.0 * std::sin(th / 2.0);
    return s;
}

// ---- tantrix ----

struct Tantrix {
    std::vector<Vec> points;  // unit edge tangents, one per edge
    Topology topology = Topology::Arc;

    std::size_t gap_count() const {
        return topology == Topology::Loop ? points.size()
                                          : points.size() - 1;
    }
    // The j-th great-circle gap connects points[j] and points[(j+1) % n].
    double gap_length(std::size_t j) const {
        return unit_angle(points[j], points[(j + 1) % points.size()]);
    }
};

inline Tantrix tantrix(const PolyCurve& c) {
    Tantrix t;
    t.points = unit_tangents(c);
    t.topology = c.topology;
    return t;
}

// Spherical length of the tantrix = TC; euclidean length = TC*.
inline double tantrix_spherical_length(const Tantrix& t) {
    double s = 0.0;
    for (std::size_t j = 0; j < t.gap_count(); ++j) s += t.gap_length(j);
    return s;
}

inline double tantrix_euclidean_length(const Tantrix& t) {
    double s = 0.0;
    for (std::size_t j = 0; j < t.gap_count(); ++j)
        s += dist(t.points[j], t.points[(j + 1) % t.points.size()]);
    return s;
}

// ---- curvature force ----

struct CurvatureForce {
    std::vector<Vec> atoms;         // K_v per interior vertex, K = T_next - T_prev
    std::vector<Vec> boundary;      // inward tangents at arc endpoints (size 0 or 2)
};

inline CurvatureForce curvature_force(const PolyCurve& c) {
    auto T = unit_tangents(c);
    const std::size_t m = T.size();
    CurvatureForce f;
    if (c.closed()) {
        f.atoms.reserve(m);
        for (std::size_t i = 0; i < m; ++i)
            f.atoms.push_back(sub(T[i], T[(i + m - 1) % m]));
    } else {
        f.atoms.reserve(m - 1);
        for (std::size_t i = 1; i < m; ++i)
            f.atoms.push_back(sub(T[i], T[i - 1]));
        f.boundary.push_back(T.front());            // inward at start
        f.boundary.push_back(scale(T.back(), -1.0)); // inward at end
    }
    return f;
}

// ---- curvature densities ----

enum class DensityModel { Angle, Chord, Arc };

inline DensityModel density_model_from_string(const std::string& s) {
    if (s == "angle") return DensityModel::Angle;
    if (s == "chord") return DensityModel::Chord;
    if (s == "arc") return DensityModel::Arc;
    throw BadParams("unknown density model: " + s);
}

// Turning-angle mass under the chosen model, for unit length weight.
inline double density_mass(DensityModel m, double theta) {
    switch (m) {
        case DensityModel::Angle: return theta;
        case DensityModel::Chord: return 2.0 * std::sin(theta / 2.0);
        case DensityModel::Arc:   return 2.0 * std::tan(theta / 2.0);
    }
    return 0.0;
}

// Length weight allocated to each interior vertex: half the sum of the
// incident edge lengths (the vertex neighborhood N_v, generalized to
// non-equilateral polygons).
inline std::vector<double> vertex_length_weights(const PolyCurve& c) {
    const std::size_t m = c.edge_count();
    std::vector<double> el(m);
    for (std::size_t i = 0; i < m; ++i) el[i] = norm(c.edge_vector(i));
    std::vector<double> w;
    if (c.closed()) {
        w.reserve(m);
        for (std::size_t i = 0; i < m; ++i)
            w.push_back(0.5 * (el[(i + m - 1) % m] + el[i]));
    } else {
        w.reserve(m - 1);
        for (std::size_t i = 1; i < m; ++i)
            w.push_back(0.5 * (el[i - 1] + el[i]));
    }
    return w;
}

struct DensityReport {
    std::vector<double> density;  // kappa_v, units 1/length
    std::vector<double> weight;   // l_v
};

// Per-vertex curvature density kappa_v = mass(theta_v) / l_v.  On a unit-edge
// equilateral polygon this reduces to theta, 2 sin(theta/2) or 2 tan(theta/2),
// and for model Arc it equals the curvature of the inscribed circular arc.
inline DensityReport curvature_density(const PolyCurve& c, DensityModel model) {
    auto th = turning_angles(c);
    auto w = vertex_length_weights(c);
    DensityReport r;
    r.weight = w;
    r.density.reserve(th.size());
    for (std::size_t k = 0; k < th.size(); ++k) {
        if (model == DensityModel::Arc && th[k] >= kPi - kCuspTol)
            throw CuspError("density model 'arc' blows up at cusp (vertex " +
                            std::to_string(interior_vertex_index(c, k)) + ")");
        r.density.push_back(density_mass(model, th[k]) / w[k]);
    }
    return r;
}

// Discrete elastic energy  sum_v kappa_v^2 l_v.
inline double bending_energy(const PolyCurve& c, DensityModel model) {
    auto r = curvature_density(c, model);
    double e = 0.0;
    for (std::size_t k = 0; k < r.density.size(); ++k)
        e += r.density[k] * r.density[k] * r.weight[k];
    return e;
}

// ---- curvature report ----

struct CurvatureReport {
    double length = 0;
    double tc = 0;
    double tc_star = 0;
    std::vector<double> theta;
    std::vector<double> k_mass;
    std::vector<double> density_angle, density_chord, density_arc; // arc entries may be inf at cusps
    std::optional<int> turning_number;
};

inline CurvatureReport curvature_report(const PolyCurve& input) {
    PolyCurve c = normalize(input);
    CurvatureReport r;
    r.length = length(c);
    r.theta = turning_angles(c);
    auto w = vertex_length_weights(c);
    for (std::size_t k = 0; k < r.theta.size(); ++k) {
        double th = r.theta[k];
        r.tc += th;
        r.k_mass.push_back(2.0 * std::sin(th / 2.0));
        r.tc_star += r.k_mass.back();
        r.density_angle.push_back(th / w[k]);
        r.density_chord.push_back(2.0 * std::sin(th / 2.0) / w[k]);
        r.density_arc.push_back(th >= kPi - kCuspTol
                                    ? std::numeric_limits<double>::infinity()
                                    : 2.0 * std::tan(th / 2.0) / w[k]);
    }
    if (c.dim == 2 && c.closed()) {
        try {
            r.turning_number = signed_turning_angles(c).turning_number;
        } catch (const AmbiguousSign&) {
            // cusp: no turning number
        }
    }
    return r;
}

// ---- spindle ----

// Membership test for the spindle of angle 2*phi with endpoints p, q:
// x lies inside iff the turning angle of the inscribed path p-x-q at x
// is at most phi.
inline bool in_spindle(const Vec& p, const Vec& q, double phi, const Vec& x,
                       double tol = 1e-12) {
    if (dist(x, p) == 0.0 || dist(x, q) == 0.0) return true;
    Vec u = normalized(sub(x, p));
    Vec v = normalized(sub(q, x));
    return unit_angle(u, v) <= phi + tol;
}

struct SpindleReport {
    double phi = 0;                     // total curvature of the arc
    std::vector<std::size_t> violations; // vertex indices outside the spindle
    bool contained() const { return violations.empty(); }
};

// Checks that every interior vertex of an arc with TC = phi < pi lies in the
// spindle of angle 2*phi spanned by the endpoints (the spindle lemma
// guarantees this).
inline SpindleReport spindle_contains(const PolyCurve& a, double tol = 1e-9) {
    if (a.closed()) throw PreconditionFailed("spindle check needs an arc");
    PolyCurve c = normalize(a);
    double phi = total_curvature(c);
    if (phi >= kPi)
        throw PreconditionFailed("spindle lemma requires TC < pi");
    SpindleReport r;
    r.phi = phi;
    const Vec& p = c.vertices.front();
    const Vec& q = c.vertices.back();
    for (std::size_t i = 1; i + 1 < c.vertex_count(); ++i)
        if (!in_spindle(p, q, phi, c.vertices[i], tol)) r.violations.push_back(i);
    return r;
}

} // namespace ftc
