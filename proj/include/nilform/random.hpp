#pragma once

#include "nilform/rational.hpp"

#include <cstdint>
#include <random>

namespace nilform {

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Deterministic generator; bounded draws use rejection sampling so sequences
/// are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next());
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    /// p/q with |p| <= num_bound and 1 <= q <= den_max.
    Rational rational(long num_bound = 9, long den_max = 10) {
        const long p = static_cast<long>(uniform(-num_bound, num_bound));
        const long q = static_cast<long>(uniform(1, den_max));
        return Rational(p, q);
    }

    Rational nonzero_rational(long num_bound = 9, long den_max = 10) {
        Rational r;
        do {
            r = rational(num_bound, den_max);
        } while (r.is_zero());
        return r;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace nilform
