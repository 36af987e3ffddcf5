#pragma once

// Shared test helpers: seeded generators and window comparisons.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "corec/corec.hpp"

namespace testing {

using corec::BigRational;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long long integer(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng_);
    }

    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    BigRational rational(long long bound = 9) {
        const long long n = integer(-bound, bound);
        const long long d = integer(1, bound);
        return BigRational::from_parts(n, d);
    }

    BigRational nonzero_rational(long long bound = 9) {
        for (;;) {
            BigRational r = rational(bound);
            if (!r.is_zero()) return r;
        }
    }

    std::vector<BigRational> rationals(std::size_t n, long long bound = 9) {
        std::vector<BigRational> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(rational(bound));
        return out;
    }

    std::vector<double> reals(std::size_t n, double lo, double hi) {
        std::vector<double> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(real(lo, hi));
        return out;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline std::vector<BigRational> q(std::initializer_list<long long> xs) {
    return {xs.begin(), xs.end()};
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = a.size() == b.size() ? 0.0 : INFINITY;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) worst = std::max(worst, std::fabs(a[i] - b[i]));
    return worst;
}

/// max_i |a_i − b_i| / max(1, |b_i|).
inline double max_rel_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = a.size() == b.size() ? 0.0 : INFINITY;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        worst = std::max(worst, std::fabs(a[i] - b[i]) / std::max(1.0, std::fabs(b[i])));
    }
    return worst;
}

}  // namespace testing
