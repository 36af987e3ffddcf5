#include "corec/qft.hpp"

#include "corec/errors.hpp"

namespace corec::qft {

PhiSeries dyson_schwinger() {
    const BigRational half = BigRational::from_parts(1, 2);
    const RationalSeries identity = RationalSeries::from({BigRational(0), BigRational(1)});
    PhiSeries phi = PhiSeries::declare("phi");
    auto d_phi = smap([](const RationalSeries& s) { return derivative(s); }, phi);
    auto body = add(d_phi, mul(phi, phi));
    phi.define(PhiSeries::cons(identity, smap([half](const RationalSeries& s) { return scale(half, s); }, body)));
    return phi;
}

RationalSeries greens(std::size_t n) {
    if (n < 2) throw ParameterError("greens: n must be at least 2");
    Series<RationalSeries> rows = transpose(dyson_schwinger());
    return rows.coeff(n - 1);
}

ParityReport parity_check(std::size_t max_order) {
    ParityReport report;
    PhiSeries phi = dyson_schwinger();
    for (std::size_t k = 0; k <= max_order; ++k) {
        const auto row = phi.coeff(k).take(max_order + 3);
        for (std::size_t a = 0; a < row.size(); ++a) {
            ++report.entries_checked;
            if ((a + k) % 2 == 0 && !row[a].is_zero()) {
                report.ok = false;
                report.violations.emplace_back(k, a);
            }
        }
    }
    return report;
}

}  // namespace corec::qft
