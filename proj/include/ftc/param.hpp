#pragma once

// Parametric curves and inscription.  All smooth curves enter the library by
// sampling: inscribe() evaluates a catalog (or user) map at given parameters
// and records the mesh size.

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ftc/curve.hpp"

namespace ftc {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

struct ParamCurve {
    int dim = 0;
    double domain = 0.0;   // parameters live in [0, domain]
    bool closed = false;   // loop: eval(0) == eval(domain)
    std::function<Vec(double)> eval;
    std::string tag;       // catalog name, or "user"
};

struct MeshedSample {
    ParamCurve curve;
    std::vector<double> params;
    PolyCurve polygon;
    double mesh = 0.0;
};

// ---- catalog ----

inline ParamCurve circle_curve(double radius = 1.0) {
    ParamCurve pc;
    pc.dim = 2;
    pc.domain = kTwoPi;
    pc.closed = true;
    pc.tag = "circle";
    pc.eval = [radius](double t) {
        return Vec{radius * std::cos(t), radius * std::sin(t)};
    };
    return pc;
}

inline ParamCurve helix_curve(double turns = 3.0, double pitch = 0.25) {
    ParamCurve pc;
    pc.dim = 3;
    pc.domain = kTwoPi * turns;
    pc.closed = false;
    pc.tag = "helix";
    pc.eval = [pitch](double t) {
        return Vec{std::cos(t), std::sin(t), pitch * t};
    };
    return pc;
}

// (p,q) torus knot on the torus of radii 2 and 1; (2,3) is the trefoil used
// throughout the test suite.
inline ParamCurve torus_knot_curve(int p = 2, int q = 3) {
    ParamCurve pc;
    pc.dim = 3;
    pc.domain = kTwoPi;
    pc.closed = true;
    pc.tag = "torus-knot(" + std::to_string(p) + "," + std::to_string(q) + ")";
    pc.eval = [p, q](double t) {
        double r = 2.0 + std::cos(q * t);
        return Vec{r * std::cos(p * t), r * std::sin(p * t), std::sin(q * t)};
    };
    return pc;
}

inline ParamCurve log_spiral_curve(double b = 0.2, double span = 2.0 * kTwoPi) {
    ParamCurve pc;
    pc.dim = 2;
    pc.domain = span;
    pc.closed = false;
    pc.tag = "log-spiral";
    pc.eval = [b](double t) {
        double r = std::exp(b * t);
        return Vec{r * std::cos(t), r * std::sin(t)};
    };
    return pc;
}

// ---- inscription ----

inline MeshedSample inscribe(const ParamCurve& pc, std::vector<double> params) {
    if (params.size() < 2) throw BadParams("need at least 2 parameters");
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i] < 0.0 || params[i] > pc.domain)
            throw BadParams("parameter outside domain");
        if (i > 0 && params[i] <= params[i - 1])
            throw BadParams("parameters must be strictly increasing");
    }
    std::vector<Vec> vs;
    vs.reserve(params.size());
    for (double t : params) vs.push_back(pc.eval(t));
    MeshedSample ms;
    ms.curve = pc;
    ms.polygon = pc.closed ? make_loop(std::move(vs)) : make_arc(std::move(vs));
    double mesh = 0.0;
    for (std::size_t i = 1; i < params.size(); ++i)
        mesh = std::max(mesh, params[i] - params[i - 1]);
    if (pc.closed)
        mesh = std::max(mesh, pc.domain - params.back() + params.front());
    ms.mesh = mesh;
    ms.params = std::move(params);
    return ms;
}

inline MeshedSample sample_uniform(const ParamCurve& pc, int n) {
    if (pc.closed ? n < 3 : n < 2)
        throw BadParams("too few samples for this topology");
    std::vector<double> ts(n);
    if (pc.closed) {
        for (int i = 0; i < n; ++i) ts[i] = pc.domain * i / n;
    } else {
        for (int i = 0; i < n; ++i) ts[i] = pc.domain * i / (n - 1);
    }
    return inscribe(pc, std::move(ts));
}

// Arclength by refining inscribed polygons; inscribed lengths increase to the
// true length, so we stop when a doubling changes the value by < tol.
inline double curve_length(const ParamCurve& pc, double tol = 1e-10) {
    int n = 64;
    double prev = length(sample_uniform(pc, n).polygon);
    for (int iter = 0; iter < 22; ++iter) {
        n *= 2;
        double cur = length(sample_uniform(pc, n).polygon);
        if (cur - prev < tol) return cur;
        prev = cur;
    }
    return prev;
}

} // namespace ftc
