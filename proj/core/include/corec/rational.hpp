#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace corec {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational over arbitrary-precision integers. Always reduced, with a
/// positive denominator; zero is 0/1.
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)

    /// n/d reduced; throws ArithmeticError when d == 0.
    static BigRational from_parts(BigInt n, BigInt d);

    /// Parses "p" or "p/q".
    static BigRational parse(const std::string& text);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    double to_double() const;
    std::string to_string() const;

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& b);
    BigRational& operator-=(const BigRational& b);
    BigRational& operator*=(const BigRational& b);
    BigRational& operator/=(const BigRational& b);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

private:
    BigRational(BigInt n, BigInt d, int) : num_(std::move(n)), den_(std::move(d)) {}
    void reduce();

    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

/// Exact integer power; negative exponents invert (zero base → ArithmeticError).
BigRational pow(const BigRational& base, long long exponent);

/// Exact square root when numerator and denominator are perfect squares.
bool exact_sqrt(const BigRational& a, BigRational& out);

}  // namespace corec
