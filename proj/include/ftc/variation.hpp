#pragma once

// First variation of length in both forms (edge form and curvature-force
// form), the length gradient, and a discrete bending-energy descent flow.

#include <cmath>
#include <cstddef>
#include <vector>

#include "ftc/curvature.hpp"

namespace ftc {

using VariationField = std::vector<Vec>;

inline void check_field(const PolyCurve& c, const VariationField& xi) {
    if (xi.size() != c.vertex_count())
        throw DimensionMismatch("variation field size mismatch");
    for (const auto& v : xi)
        if (int(v.size()) != c.dim)
            throw DimensionMismatch("variation field dimension mismatch");
}

// delta_xi Len = sum_edges <T_e, xi(head) - xi(tail)>; exact for polygons.
inline double first_variation_length(const PolyCurve& c,
                                     const VariationField& xi) {
    check_field(c, xi);
    auto T = unit_tangents(c);
    double s = 0.0;
    const std::size_t n = c.vertex_count();
    for (std::size_t i = 0; i < c.edge_count(); ++i)
        s += dot(T[i], sub(xi[(i + 1) % n], xi[i]));
    return s;
}

// Curvature-force form: -sum_v <xi, K_v> - sum_endpoints <xi, inward T>.
// Algebraically identical to the edge form.
inline double first_variation_force_form(const PolyCurve& c,
                                         const VariationField& xi) {
    check_field(c, xi);
    CurvatureForce f = curvature_force(c);
    double s = 0.0;
    for (std::size_t k = 0; k < f.atoms.size(); ++k)
        s -= dot(xi[interior_vertex_index(c, k)], f.atoms[k]);
    if (!c.closed()) {
        s -= dot(xi.front(), f.boundary[0]);
        s -= dot(xi.back(), f.boundary[1]);
    }
    return s;
}

// Field g with delta_xi Len = -sum_v <xi(v), g(v)>: g = K_v at interior
// vertices, g = inward tangent at arc endpoints.
inline VariationField length_gradient(const PolyCurve& c) {
    CurvatureForce f = curvature_force(c);
    VariationField g(c.vertex_count(), Vec(c.dim, 0.0));
    for (std::size_t k = 0; k < f.atoms.size(); ++k)
        g[interior_vertex_index(c, k)] = f.atoms[k];
    if (!c.closed()) {
        g.front() = f.boundary[0];
        g.back() = f.boundary[1];
    }
    return g;
}

// ---- bending flow ----

struct FlowConfig {
    DensityModel model = DensityModel::Arc;
    int max_steps = 1000;
    double lambda = 1.0;       // weight of the edge-uniformity penalty
    double grad_tol = 1e-8;
    double fd_step = 1e-6;     // finite-difference step, times the edge scale
};

struct FlowIterate {
    PolyCurve curve;
    double energy = 0;
    double grad_norm = 0;
    double step_size = 0;
};

struct FlowTrace {
    FlowConfig config;
    std::vector<FlowIterate> iterates;
    bool converged = false;
    bool cusp_aborted = false;
};

namespace detail {

// Scale-invariant flow objective: Len * bending energy plus a dimensionless
// edge-uniformity penalty, normalized per vertex.  Scale invariance makes the
// regular n-gon an exact critical point, which the plain energy (with its
// nonzero dilation derivative) is not; the 1/m^2 normalization keeps the
// objective small enough that finite-difference gradients resolve
// stationarity below 1e-8.
inline double flow_objective(const PolyCurve& c, const FlowConfig& cfg) {
    double L = length(c);
    double e = bending_energy(c, cfg.model);
    const std::size_t m = c.edge_count();
    double mean = L / double(m);
    double pen = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double r = norm(c.edge_vector(i)) / mean - 1.0;
        pen += r * r;
    }
    return (L * e + cfg.lambda * pen) / double(m * m);
}

} // namespace detail

// Backtracking gradient descent on the flow objective; the gradient is
// computed by central finite differences on vertex coordinates.
inline FlowTrace bending_flow(const PolyCurve& input, const FlowConfig& cfg) {
    FlowTrace trace;
    trace.config = cfg;
    PolyCurve c = normalize(input);
    double scale = length(c) / double(c.edge_count());
    double h = cfg.fd_step * scale;
    double step = 0.1 * scale;

    try {
        double energy = detail::flow_objective(c, cfg);
        for (int it = 0; it <= cfg.max_steps; ++it) {
            // finite-difference gradient
            std::vector<Vec> grad(c.vertex_count(), Vec(c.dim, 0.0));
            double gnorm2 = 0.0;
            for (std::size_t vi = 0; vi < c.vertex_count(); ++vi) {
                for (int j = 0; j < c.dim; ++j) {
                    double orig = c.vertices[vi][j];
                    c.vertices[vi][j] = orig + h;
                    double ep = detail::flow_objective(c, cfg);
                    c.vertices[vi][j] = orig - h;
                    double em = detail::flow_objective(c, cfg);
                    c.vertices[vi][j] = orig;
                    double g = (ep - em) / (2.0 * h);
                    grad[vi][j] = g;
                    gnorm2 += g * g;
                }
            }
            double gnorm = std::sqrt(gnorm2);
            trace.iterates.push_back({c, energy, gnorm, 0.0});
            if (gnorm <= cfg.grad_tol) {
                trace.converged = true;
                break;
            }
            if (it == cfg.max_steps) break;

            // Armijo backtracking
            bool accepted = false;
            double t = step;
            for (int bt = 0; bt < 50; ++bt) {
                PolyCurve cand = c;
                for (std::size_t vi = 0; vi < c.vertex_count(); ++vi)
                    axpy(-t, grad[vi], cand.vertices[vi]);
                double ec;
                try {
                    ec = detail::flow_objective(cand, cfg);
                } catch (const CuspError&) {
                    t *= 0.5;
                    continue;
                }
                if (ec < energy - 1e-4 * t * gnorm2) {
                    c = std::move(cand);
                    energy = ec;
                    trace.iterates.back().step_size = t;
                    step = t * 1.5;
                    accepted = true;
                    break;
                }
                t *= 0.5;
            }
            if (!accepted) {
                trace.converged = true;  // no descent direction at this resolution
                break;
            }
        }
    } catch (const CuspError&) {
        trace.cusp_aborted = true;
    }
    return trace;
}

} // namespace ftc
