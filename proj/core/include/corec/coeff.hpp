#pragma once

// Coefficient domains. Every algebraic structure in the library is generic
// over a coefficient type C that supports + - * / and unary -, plus the two
// customization points below:
//
//   coeff_traits<C>  from_int / is_zero
//   elementary<C>    exp log sqrt sin cos atan asin pow, on single values
//
// is_zero never forces lazy structure: for lazy coefficient types (series,
// derivative towers) it answers "provably zero by construction", and is
// conservative otherwise.

#include <cmath>
#include <string>

#include "corec/errors.hpp"
#include "corec/rational.hpp"

namespace corec {

template <class C>
struct coeff_traits;

template <>
struct coeff_traits<double> {
    static double from_int(long long n) { return static_cast<double>(n); }
    static bool is_zero(double x) { return x == 0.0; }
};

template <>
struct coeff_traits<BigRational> {
    static BigRational from_int(long long n) { return BigRational(n); }
    static bool is_zero(const BigRational& x) { return x.is_zero(); }
};

template <class C>
C from_int(long long n) {
    return coeff_traits<C>::from_int(n);
}

template <class C>
bool is_zero(const C& c) {
    return coeff_traits<C>::is_zero(c);
}

template <class C>
struct elementary;

template <>
struct elementary<double> {
    static double exp(double x) { return std::exp(x); }
    static double log(double x) {
        if (!(x > 0.0)) throw DomainError("log of non-positive value " + std::to_string(x));
        return std::log(x);
    }
    static double sqrt(double x) {
        if (x < 0.0) throw DomainError("sqrt of negative value " + std::to_string(x));
        return std::sqrt(x);
    }
    static double sin(double x) { return std::sin(x); }
    static double cos(double x) { return std::cos(x); }
    static double atan(double x) { return std::atan(x); }
    static double asin(double x) {
        if (!(std::fabs(x) <= 1.0)) throw DomainError("asin outside [-1,1]: " + std::to_string(x));
        return std::asin(x);
    }
    static double pow(double x, double a) { return std::pow(x, a); }
};

/// Exact rationals only admit the points where the result stays rational.
template <>
struct elementary<BigRational> {
    static BigRational exp(const BigRational& x) {
        if (!x.is_zero()) throw DomainError("exp of non-zero rational " + x.to_string() + " is not rational");
        return BigRational(1);
    }
    static BigRational log(const BigRational& x) {
        if (x != BigRational(1)) throw DomainError("log of rational " + x.to_string() + " is not rational");
        return BigRational(0);
    }
    static BigRational sqrt(const BigRational& x) {
        BigRational r;
        if (!exact_sqrt(x, r)) throw DomainError("sqrt of rational " + x.to_string() + " is not rational");
        return r;
    }
    static BigRational sin(const BigRational& x) {
        if (!x.is_zero()) throw DomainError("sin of non-zero rational is not rational");
        return BigRational(0);
    }
    static BigRational cos(const BigRational& x) {
        if (!x.is_zero()) throw DomainError("cos of non-zero rational is not rational");
        return BigRational(1);
    }
    static BigRational atan(const BigRational& x) {
        if (!x.is_zero()) throw DomainError("atan of non-zero rational is not rational");
        return BigRational(0);
    }
    static BigRational asin(const BigRational& x) {
        if (!x.is_zero()) throw DomainError("asin of non-zero rational is not rational");
        return BigRational(0);
    }
    static BigRational pow(const BigRational& x, const BigRational& a) {
        if (x == BigRational(1)) return x;
        if (!a.is_integer()) throw DomainError("non-integer power of rational " + x.to_string());
        return corec::pow(x, a.num().convert_to<long long>());
    }
};

}  // namespace corec
