#pragma once

// Smallest enclosing ball by Welzl's randomized incremental algorithm with
// move-to-front, support sets of at most d+1 points.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "ftc/rng.hpp"
#include "ftc/vec.hpp"

namespace ftc {

struct Ball {
    Vec center;
    double radius = -1.0;  // negative: empty ball

    bool contains(const Vec& p, double eps = 1e-10) const {
        if (radius < 0) return false;
        return dist(center, p) <= radius * (1.0 + eps) + eps;
    }
};

namespace detail {

// Smallest ball with all support points on its boundary.  Solves the Gram
// system 2 Q^T Q lambda = (|q_i|^2); zero pivots (affinely dependent support)
// get lambda = 0, which drops the redundant point.
inline Ball ball_from_support(const std::vector<Vec>& support) {
    Ball b;
    if (support.empty()) return b;
    const std::size_t m = support.size() - 1;
    if (m == 0) {
        b.center = support[0];
        b.radius = 0.0;
        return b;
    }
    std::vector<Vec> q(m);
    for (std::size_t i = 0; i < m; ++i) q[i] = sub(support[i + 1], support[0]);
    // A = 2 Q^T Q, rhs = |q_i|^2
    std::vector<std::vector<double>> A(m, std::vector<double>(m + 1));
    double scale_ref = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) A[i][j] = 2.0 * dot(q[i], q[j]);
        A[i][m] = dot(q[i], q[i]);
        scale_ref = std::max(scale_ref, std::abs(A[i][i]));
    }
    const double piv_tol = 1e-12 * std::max(scale_ref, 1e-300);
    std::vector<double> lambda(m, 0.0);
    std::vector<std::size_t> col(m);
    for (std::size_t i = 0; i < m; ++i) col[i] = i;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m && row < m; ++c) {
        std::size_t best = row;
        for (std::size_t r = row + 1; r < m; ++r)
            if (std::abs(A[r][c]) > std::abs(A[best][c])) best = r;
        if (std::abs(A[best][c]) <= piv_tol) continue;
        std::swap(A[row], A[best]);
        col[row] = c;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row) continue;
            double f = A[r][c] / A[row][c];
            for (std::size_t j = c; j <= m; ++j) A[r][j] -= f * A[row][j];
        }
        ++row;
    }
    for (std::size_t r = 0; r < row; ++r)
        lambda[col[r]] = A[r][m] / A[r][col[r]];
    b.center = support[0];
    for (std::size_t i = 0; i < m; ++i) axpy(lambda[i], q[i], b.center);
    b.radius = dist(b.center, support[0]);
    return b;
}

inline Ball welzl_mtf(std::vector<Vec>& pts, std::size_t end,
                      std::vector<Vec>& support, int dim) {
    Ball b = ball_from_support(support);
    if (int(support.size()) == dim + 1) return b;
    for (std::size_t i = 0; i < end; ++i) {
        if (!b.contains(pts[i])) {
            support.push_back(pts[i]);
            b = welzl_mtf(pts, i, support, dim);
            support.pop_back();
            Vec p = pts[i];  // move to front
            pts.erase(pts.begin() + long(i));
            pts.insert(pts.begin(), std::move(p));
        }
    }
    return b;
}

} // namespace detail

inline Ball min_enclosing_ball(const std::vector<Vec>& points, int dim,
                               std::uint64_t shuffle_seed = 0x5eedull) {
    if (points.empty()) throw BadParams("min_enclosing_ball: no points");
    std::vector<Vec> pts = points;
    RngStream rng(shuffle_seed);
    for (std::size_t i = pts.size(); i > 1; --i)
        std::swap(pts[i - 1], pts[rng.next_u64() % i]);
    std::vector<Vec> support;
    return detail::welzl_mtf(pts, pts.size(), support, dim);
}

} // namespace ftc
