#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace oracle {

/// Σ x[n]·e^{−iωn} over the whole window.
inline std::complex<double> dft_at(const std::vector<double>& x, double omega) {
    std::complex<double> acc = 0.0;
    for (std::size_t n = 0; n < x.size(); ++n) {
        const double phase = -omega * static_cast<double>(n);
        acc += x[n] * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return acc;
}

/// Integer bin in [1, N/2) of largest magnitude; DC is excluded.
inline std::size_t dominant_bin(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::size_t best_bin = 1;
    double best = -1.0;
    for (std::size_t k = 1; k < n / 2; ++k) {
        const double omega = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        const double mag = std::abs(dft_at(x, omega));
        if (mag > best) {
            best = mag;
            best_bin = k;
        }
    }
    return best_bin;
}

}  // namespace oracle
