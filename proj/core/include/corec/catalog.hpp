#pragma once

// Named showcase sequences: integers, Fibonacci, partition numbers, the
// regular solution of x²w'' + w' + w/4 = 0, and two series demos.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "corec/lazy.hpp"
#include "corec/rational.hpp"
#include "corec/series.hpp"

namespace corec::catalog {

Stream<BigInt> ones();
/// 1 : (integs + ones)
Stream<BigInt> integs();
/// 0 : ftail, ftail = 1 : (fibs + ftail)
Stream<BigInt> fibs();

/// Generating function of the partition numbers, from the open family
/// B_m = 1 + x(B_{m+1} + x^{m-1} B_m). Each B_m is created only when first
/// needed, so N coefficients create about N member series; pass `members` to
/// observe the count.
Series<BigRational> partitions(std::shared_ptr<std::size_t> members = nullptr);

/// w = ∫(−w/4 − x²w'') with w0 = 1, integrated once.
Series<BigRational> bessel_series();

/// exp of the identity series, over the rationals.
Series<BigRational> exp_demo();
/// Reversion of x + x².
Series<BigRational> revser_demo();

enum class Domain { exact, floating };

using CatalogValue = std::variant<Stream<BigInt>, Series<BigRational>>;

struct CatalogEntry {
    std::string name;
    Domain domain;
    std::function<CatalogValue()> producer;
};

const std::vector<CatalogEntry>& entries();

/// nullptr when unknown.
const CatalogEntry* find(const std::string& name);

/// First n values of the entry, as text.
std::vector<std::string> render(const CatalogEntry& entry, std::size_t n);

}  // namespace corec::catalog
