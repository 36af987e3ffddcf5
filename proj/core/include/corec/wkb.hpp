#pragma once

// WKB expansion of ε²y'' = Q(x)y at one point x.
//
// With y = exp(S0/ε + U(x;ε²) + εV(x;ε²)) and S0' = ±√Q given, U and V' are
// series in ε² whose coefficients are derivative towers in x:
//
//   U  = −½ log(S0' :* V')
//   V' = (−½/S0')·(U'·U' + U'' +: V'·V')
//
// where `a +: z` adds z one ε²-order up. Coefficient k of V' needs U up to
// order k and V' only below k, so the pair is productive.

#include <cstddef>

#include "corec/dif.hpp"
#include "corec/series.hpp"

namespace corec::wkb {

using DifD = Dif<double>;
/// Outer index: power of ε². Inner: derivative order in x.
using DifSeries = Series<DifD>;

struct WkbResult {
    DifSeries u;
    DifSeries v_prime;
    Series<double> u_main;        // value of each u coefficient
    Series<double> v_prime_main;  // value of each v' coefficient
};

/// a0 :* (aq + z).
DifSeries add_to_tail(const DifSeries& a, const DifSeries& z);

/// Requires main value of s0_prime > 0 and orders ≥ 1. The first `orders`
/// coefficients of u_main and v_prime_main are forced before returning; the
/// series stay extensible beyond that.
WkbResult wkb_expand(const DifD& s0_prime, std::size_t orders);

/// √x at x0 as a tower (the Airy case Q(x) = x). Requires x0 > 0.
DifD airy_s0_prime(double x0);

}  // namespace corec::wkb
