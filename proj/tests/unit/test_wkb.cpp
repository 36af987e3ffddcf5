#include <doctest.h>

#include <cmath>

#include "corec/wkb.hpp"
#include "oracles/jet.hpp"
#include "support.hpp"

using corec::wkb::DifD;
using corec::wkb::DifSeries;

namespace {

std::vector<double> values(const DifSeries& s, std::size_t n) {
    std::vector<double> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(s.coeff(k).value());
    return out;
}

DifSeries consts(std::initializer_list<double> xs) {
    std::vector<DifD> ds;
    for (double x : xs) ds.push_back(DifD::constant(x));
    return DifSeries::from(ds);
}

oracle::Jet jet_of(const DifD& d, std::size_t from, std::size_t count) {
    std::vector<double> el;
    for (std::size_t k = 0; k < from + count; ++k) el.push_back(d.element(k));
    // derivative towers of f^{(from)}: drop `from` leading elements
    return oracle::jet_from_derivatives(std::vector<double>(el.begin() + static_cast<long>(from), el.end()));
}

}  // namespace

TEST_CASE("add_to_tail") {
    CHECK(values(corec::wkb::add_to_tail(consts({4}), DifSeries::zero()), 3) == std::vector<double>{4, 0, 0});
    CHECK(values(corec::wkb::add_to_tail(consts({1, 2}), consts({10})), 3) == std::vector<double>{1, 12, 0});
    CHECK(values(corec::wkb::add_to_tail(DifSeries::zero(), consts({5, 6})), 4) == std::vector<double>{0, 5, 6, 0});
    // coefficient 0 does not look at z at all
    DifSeries z = DifSeries::declare("never");
    CHECK(corec::wkb::add_to_tail(consts({3}), z).coeff(0).value() == 3.0);
}

TEST_CASE("airy S0'") {
    CHECK(testing::max_abs_diff(corec::wkb::airy_s0_prime(1.0).take(4), {1, 0.5, -0.25, 0.375}) < 1e-15);
    CHECK(corec::wkb::airy_s0_prime(4.0).value() == 2.0);
    for (double x0 : {0.5, 1.0, 3.0}) {
        const DifD s = corec::wkb::airy_s0_prime(x0);
        CHECK(testing::max_abs_diff(corec::sqr(s).take(6), DifD::variable(x0).take(6)) < 1e-12);
    }
    CHECK_THROWS_AS(corec::wkb::airy_s0_prime(0.0), corec::DomainError);
    CHECK_THROWS_AS(corec::wkb::airy_s0_prime(-2.0), corec::DomainError);
}

TEST_CASE("order zero is the amplitude law") {
    for (double x0 : {0.25, 1.0, 2.0, 9.0}) {
        const DifD s0 = corec::wkb::airy_s0_prime(x0);
        const auto res = corec::wkb::wkb_expand(s0, 1);
        CHECK(res.u_main.coeff(0) == doctest::Approx(-0.5 * std::log(std::sqrt(x0))).epsilon(1e-14));
        CHECK(std::exp(res.u_main.coeff(0)) == doctest::Approx(std::pow(x0, -0.25)).epsilon(1e-12));
    }
}

TEST_CASE("v'0 closed form for Q = x") {
    for (double x0 : {1.0, 2.0, 5.0}) {
        const auto res = corec::wkb::wkb_expand(corec::wkb::airy_s0_prime(x0), 1);
        CHECK(res.v_prime_main.coeff(0) == doctest::Approx(-5.0 / (32.0 * std::pow(x0, 2.5))).epsilon(1e-12));
    }
}

TEST_CASE("agrees with the classical WKB recurrence") {
    const std::size_t orders = 4;
    for (double x0 : {1.0, 2.0}) {
        const auto res = corec::wkb::wkb_expand(corec::wkb::airy_s0_prime(x0), orders);
        const auto s = oracle::classical_wkb(oracle::sqrt_jet(x0, 24), 2 * orders + 1);
        for (std::size_t k = 0; k < orders; ++k) {
            const double u_prime = corec::shift(res.u.coeff(k)).value();
            const double v_prime = res.v_prime_main.coeff(k);
            const double su = s[2 * k + 1][0], sv = s[2 * k + 2][0];
            CHECK(std::fabs(u_prime - su) <= 1e-10 * std::max(1.0, std::fabs(su)));
            CHECK(std::fabs(v_prime - sv) <= 1e-10 * std::max(1.0, std::fabs(sv)));
        }
    }
}

TEST_CASE("v' satisfies its defining recurrence") {
    const std::size_t orders = 4, m = 3;
    const double x0 = 1.0;
    const DifD s0 = corec::wkb::airy_s0_prime(x0);
    const auto res = corec::wkb::wkb_expand(s0, orders);
    const oracle::Jet coef = oracle::jet_scale(-0.5, oracle::jet_recip(jet_of(s0, 0, m)));
    for (std::size_t k = 0; k < orders; ++k) {
        oracle::Jet acc = jet_of(res.u.coeff(k), 2, m);
        for (std::size_t i = 0; i <= k; ++i)
            acc = oracle::jet_add(acc, oracle::jet_mul(jet_of(res.u.coeff(i), 1, m), jet_of(res.u.coeff(k - i), 1, m)));
        for (std::size_t i = 0; i + 1 <= k; ++i)
            acc = oracle::jet_add(acc, oracle::jet_mul(jet_of(res.v_prime.coeff(i), 0, m),
                                                      jet_of(res.v_prime.coeff(k - 1 - i), 0, m)));
        const oracle::Jet rhs = oracle::jet_mul(coef, acc);
        const oracle::Jet lhs = jet_of(res.v_prime.coeff(k), 0, m);
        for (std::size_t j = 0; j < m; ++j) CHECK(std::fabs(lhs[j] - rhs[j]) <= 1e-12 * std::max(1.0, std::fabs(rhs[j])));
    }
}

TEST_CASE("finite progress: result towers grow quadratically") {
    for (std::size_t orders = 1; orders <= 5; ++orders) {
        const auto res = corec::wkb::wkb_expand(corec::wkb::airy_s0_prime(1.0), orders);
        std::size_t elements = 0;
        for (std::size_t k = 0; k < orders; ++k) {
            elements += res.u.coeff(k).evaluated_depth() + res.v_prime.coeff(k).evaluated_depth();
        }
        CHECK(elements <= 2 * orders * (orders + 1));
        CHECK(res.v_prime_main.evaluated_prefix() >= orders);
    }
}

TEST_CASE("the expansion stays extensible") {
    const auto res = corec::wkb::wkb_expand(corec::wkb::airy_s0_prime(1.0), 1);
    const auto more = corec::wkb::wkb_expand(corec::wkb::airy_s0_prime(1.0), 3);
    CHECK(res.v_prime_main.coeff(2) == more.v_prime_main.coeff(2));
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(corec::wkb::wkb_expand(corec::wkb::airy_s0_prime(1.0), 0), corec::ParameterError);
    CHECK_THROWS_AS(corec::wkb::wkb_expand(DifD::variable(-1.0), 2), corec::DomainError);
    CHECK_THROWS_AS(corec::wkb::wkb_expand(DifD::constant(0.0), 2), corec::DomainError);
}
