#include "corec/rational.hpp"

#include <ostream>

#include "corec/errors.hpp"

namespace corec {

namespace mp = boost::multiprecision;

BigRational BigRational::from_parts(BigInt n, BigInt d) {
    if (d.is_zero()) throw ArithmeticError("rational with zero denominator");
    BigRational r(std::move(n), std::move(d), 0);
    r.reduce();
    return r;
}

BigRational BigRational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return BigRational(BigInt(text));
        return from_parts(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw ArithmeticError("malformed rational '" + text + "'");
    }
}

void BigRational::reduce() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = mp::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

double BigRational::to_double() const {
    // cpp_int -> double conversions are correctly rounded individually; the
    // quotient is close enough for display and float interop.
    return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string BigRational::to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

BigRational BigRational::operator-() const { return BigRational(-num_, den_, 0); }

BigRational& BigRational::operator+=(const BigRational& b) {
    if (den_ == b.den_) {
        num_ += b.num_;
    } else {
        num_ = num_ * b.den_ + b.num_ * den_;
        den_ *= b.den_;
    }
    reduce();
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& b) {
    if (den_ == b.den_) {
        num_ -= b.num_;
    } else {
        num_ = num_ * b.den_ - b.num_ * den_;
        den_ *= b.den_;
    }
    reduce();
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& b) {
    num_ *= b.num_;
    den_ *= b.den_;
    reduce();
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& b) {
    if (b.is_zero()) throw ArithmeticError("rational division by zero");
    BigInt n = num_ * b.den_;
    den_ *= b.num_;
    num_ = std::move(n);
    reduce();
    return *this;
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

BigRational pow(const BigRational& base, long long exponent) {
    if (exponent < 0) {
        if (base.is_zero()) throw ArithmeticError("zero raised to a negative power");
        return BigRational(1) / pow(base, -exponent);
    }
    BigRational result(1);
    BigRational square = base;
    auto e = static_cast<unsigned long long>(exponent);
    while (e != 0) {
        if (e & 1U) result *= square;
        e >>= 1U;
        if (e != 0) square *= square;
    }
    return result;
}

bool exact_sqrt(const BigRational& a, BigRational& out) {
    if (a.sign() < 0) return false;
    const BigInt n = mp::sqrt(a.num());
    const BigInt d = mp::sqrt(a.den());
    if (n * n != a.num() || d * d != a.den()) return false;
    out = BigRational::from_parts(n, d);
    return true;
}

}  // namespace corec
