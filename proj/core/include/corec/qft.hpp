#pragma once

// Zero-dimensional field theory: the connected Dyson-Schwinger equation
//   φ = J + ½γ(φ' + φ²),   ' = d/dJ,  propagator fixed to 1,
// solved as a series in γ whose coefficients are polynomials in J.

#include <cstddef>
#include <utility>
#include <vector>

#include "corec/rational.hpp"
#include "corec/series.hpp"

namespace corec::qft {

using RationalSeries = Series<BigRational>;
/// Outer index: power of γ. Inner index: power of J.
using PhiSeries = Series<RationalSeries>;

PhiSeries dyson_schwinger();

/// The γ-series of the J^{n-1} coefficient of φ (row n−1 of the transpose),
/// with no factorial normalization. Requires n ≥ 2.
RationalSeries greens(std::size_t n);

struct ParityReport {
    bool ok = true;
    std::size_t entries_checked = 0;
    /// (γ power, J power) pairs with a + k even but a nonzero coefficient.
    std::vector<std::pair<std::size_t, std::size_t>> violations;
};

/// Checks coefficient (γ^k, J^a) = 0 whenever a + k is even, for k ≤ max_order
/// and a ≤ max_order + 2.
ParityReport parity_check(std::size_t max_order);

}  // namespace corec::qft
