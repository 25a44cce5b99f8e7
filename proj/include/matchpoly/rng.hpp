#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "matchpoly/rational.hpp"

namespace matchpoly {

// Deterministic pseudo-random source: mt19937_64 (fully specified by the
// standard, so streams are identical across platforms) with explicit modulo
// mapping for bounded draws. Used only to pick test points; never feeds any
// certified arithmetic with approximations.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Inclusive range; requires lo <= hi.
    long uniform_int(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next_u64() % span);
    }

    bool coin() { return (next_u64() & 1) != 0; }

    // Numerator in [-num_bound, num_bound], denominator in [1, den_bound].
    Rational rational(long num_bound, long den_bound) {
        return make_rational(uniform_int(-num_bound, num_bound), uniform_int(1, den_bound));
    }

    // Numerator in [1, num_bound]: strictly positive value.
    Rational positive_rational(long num_bound, long den_bound) {
        return make_rational(uniform_int(1, num_bound), uniform_int(1, den_bound));
    }

    // Value in [-radius, radius] with denominator at most den_bound.
    Rational rational_in_radius(long radius, long den_bound) {
        const long den = uniform_int(1, den_bound);
        return make_rational(uniform_int(-radius * den, radius * den), den);
    }

    std::vector<Rational> rational_vector(int n, long num_bound, long den_bound) {
        std::vector<Rational> v;
        v.reserve(n);
        for (int i = 0; i < n; ++i) v.push_back(rational(num_bound, den_bound));
        return v;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace matchpoly
