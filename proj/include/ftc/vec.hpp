#pragma once

// Small dense-vector helpers for points in E^d.  Dimension is dynamic and
// usually tiny (2..4), so plain std::vector<double> is fine.

#include <cmath>
#include <cstddef>
#include <vector>

#include "ftc/errors.hpp"

namespace ftc {

using Vec = std::vector<double>;

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(const Vec& a, double s) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

inline void axpy(double s, const Vec& x, Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += s * x[i];
}

inline double dot(const Vec& a, const Vec& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double dist(const Vec& a, const Vec& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline Vec normalized(const Vec& a) {
    double n = norm(a);
    if (n == 0) throw DegenerateCurve("cannot normalize zero vector");
    return scale(a, 1.0 / n);
}

inline Vec lerp(const Vec& a, const Vec& b, double t) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + t * (b[i] - a[i]);
    return r;
}

// Angle between two unit vectors, stable near 0 and pi:
// tan(theta/2) = |u-v| / |u+v|.
inline double unit_angle(const Vec& u, const Vec& v) {
    return 2.0 * std::atan2(dist(u, v), norm(add(u, v)));
}

// Euclidean midpoint projected to the unit sphere; caller must ensure the
// inputs are not antipodal.
inline Vec sphere_midpoint(const Vec& u, const Vec& v) {
    return normalized(add(u, v));
}

// Some unit vector orthogonal to u (d >= 2).
inline Vec any_orthogonal(const Vec& u) {
    // Gram-Schmidt a coordinate axis against u; pick the axis least aligned.
    std::size_t k = 0;
    double best = std::abs(u[0]);
    for (std::size_t i = 1; i < u.size(); ++i)
        if (std::abs(u[i]) < best) { best = std::abs(u[i]); k = i; }
    Vec e(u.size(), 0.0);
    e[k] = 1.0;
    axpy(-dot(e, u), u, e);
    return normalized(e);
}

// Orthonormal basis of the hyperplane orthogonal to unit vector v.
inline std::vector<Vec> complement_basis(const Vec& v) {
    const std::size_t d = v.size();
    std::vector<Vec> basis;
    basis.reserve(d - 1);
    for (std::size_t i = 0; i < d && basis.size() < d - 1; ++i) {
        Vec e(d, 0.0);
        e[i] = 1.0;
        axpy(-dot(e, v), v, e);
        for (const auto& b : basis) axpy(-dot(e, b), b, e);
        double n = norm(e);
        if (n > 1e-8) basis.push_back(scale(e, 1.0 / n));
    }
    return basis;
}

} // namespace ftc
