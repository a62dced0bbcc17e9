#pragma once

// Counter-based splittable random streams.  Every Monte-Carlo sample gets its
// own stream keyed by (seed, index), so results do not depend on evaluation
// order and identical seeds give bit-identical output.

#include <cmath>
#include <cstdint>

#include "ftc/vec.hpp"

namespace ftc {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}
} // namespace detail

class RngStream {
public:
    // Stream keyed by (seed, index[, retry]); different keys are independent.
    explicit RngStream(std::uint64_t seed, std::uint64_t index = 0,
                       std::uint64_t retry = 0) {
        state_ = seed;
        (void)detail::splitmix64(state_);
        state_ ^= 0x9E3779B97F4A7C15ull * (index + 1);
        (void)detail::splitmix64(state_);
        state_ ^= 0xC2B2AE3D27D4EB4Full * (retry + 1);
        (void)detail::splitmix64(state_);
    }

    std::uint64_t next_u64() { return detail::splitmix64(state_); }

    // Uniform in [0,1).
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller (platform-independent).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do { u1 = uniform(); } while (u1 <= 0.0);
        u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    Vec gaussian_vec(int d) {
        Vec v(d);
        for (int i = 0; i < d; ++i) v[i] = gaussian();
        return v;
    }

    // Uniform direction on S^{d-1}.
    Vec unit_vec(int d) {
        for (;;) {
            Vec v = gaussian_vec(d);
            double n = norm(v);
            if (n > 1e-100) return scale(v, 1.0 / n);
        }
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace ftc
