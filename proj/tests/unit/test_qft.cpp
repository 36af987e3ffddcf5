#include <doctest.h>

#include "corec/qft.hpp"
#include "support.hpp"

using corec::BigRational;
namespace qft = corec::qft;

namespace {

BigRational r(long long n, long long d) { return BigRational::from_parts(n, d); }

using Grid = std::vector<std::vector<BigRational>>;

Grid window(std::size_t gammas, std::size_t js) {
    const auto phi = qft::dyson_schwinger();
    Grid g;
    for (std::size_t k = 0; k < gammas; ++k) g.push_back(phi.coeff(k).take(js));
    return g;
}

}  // namespace

TEST_CASE("first three γ orders by hand") {
    const auto phi = qft::dyson_schwinger();
    CHECK(phi.coeff(0).take(4) == testing::q({0, 1, 0, 0}));
    CHECK(phi.coeff(1).take(4) == std::vector<BigRational>{r(1, 2), 0, r(1, 2), 0});
    CHECK(phi.coeff(2).take(5) == std::vector<BigRational>{0, 1, 0, r(1, 2), 0});
}

TEST_CASE("G2 through γ^12") {
    const auto g2 = qft::greens(2).take(13);
    const std::vector<BigRational> even = {1, 1, r(25, 8), 15, r(12155, 128), r(11865, 16), r(7040125, 1024)};
    for (std::size_t k = 0; k <= 12; ++k) {
        if (k % 2 == 0) {
            CHECK(g2[k] == even[k / 2]);
        } else {
            CHECK(g2[k].is_zero());
        }
    }
    CHECK(qft::greens(2).coeff(0) == BigRational(1));
}

TEST_CASE("G4 through γ^8") {
    const auto g4 = qft::greens(4).take(9);
    CHECK(g4 == std::vector<BigRational>{0, 0, r(1, 2), 0, 4, 0, r(525, 16), 0, 300});
}

TEST_CASE("G3 has only odd powers of γ") {
    const auto g3 = qft::greens(3).take(14);
    for (std::size_t k = 0; k < g3.size(); k += 2) CHECK(g3[k].is_zero());
    CHECK_FALSE(g3[1].is_zero());
}

TEST_CASE("greens rejects n < 2") {
    CHECK_THROWS_AS(qft::greens(1), corec::ParameterError);
    CHECK_THROWS_AS(qft::greens(0), corec::ParameterError);
}

TEST_CASE("parity") {
    const auto report = qft::parity_check(12);
    CHECK(report.ok);
    CHECK(report.violations.empty());
    CHECK(report.entries_checked == 13 * 15);
}

TEST_CASE("fixed-point residual vanishes to (γ^14, J^15)") {
    const std::size_t K = 15, A = 16;
    const Grid phi = window(K, A + 1);
    const BigRational half = r(1, 2);
    for (std::size_t k = 0; k < K; ++k) {
        for (std::size_t a = 0; a < A; ++a) {
            BigRational rhs = (k == 0 && a == 1) ? BigRational(1) : BigRational(0);
            if (k > 0) {
                BigRational body = BigRational(static_cast<long long>(a + 1)) * phi[k - 1][a + 1];
                for (std::size_t i = 0; i <= k - 1; ++i)
                    for (std::size_t b = 0; b <= a; ++b) body += phi[i][b] * phi[k - 1 - i][a - b];
                rhs += half * body;
            }
            REQUIRE(phi[k][a] == rhs);
        }
    }
}

TEST_CASE("γ^k coefficient is a polynomial of degree exactly k+1") {
    const Grid phi = window(13, 16);
    for (std::size_t k = 0; k <= 12; ++k) {
        CHECK_FALSE(phi[k][k + 1].is_zero());
        for (std::size_t a = k + 2; a < 16; ++a) CHECK(phi[k][a].is_zero());
    }
}

TEST_CASE("greens is the transposed view of φ") {
    const Grid phi = window(13, 6);
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto g = qft::greens(n).take(13);
        for (std::size_t k = 0; k <= 12; ++k) CHECK(g[k] == phi[k][n - 1]);
    }
}

TEST_CASE("deep orders stay exact") {
    const auto g2 = qft::greens(2).take(21);
    CHECK(g2[20].sign() > 0);
    CHECK(g2[19].is_zero());
}
