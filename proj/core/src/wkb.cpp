#include "corec/wkb.hpp"

#include <string>

#include "corec/errors.hpp"
#include "corec/format.hpp"

namespace corec::wkb {

DifSeries add_to_tail(const DifSeries& a, const DifSeries& z) {
    using Node = DifSeries::Node;
    return DifSeries::from_producer("add_to_tail", [a, z]() -> Node {
        const Node& an = a.node();
        if (an.end) return Node{false, DifD(), z.cell()};
        return Node{false, an.head, add(DifSeries(an.next), z).cell()};
    });
}

WkbResult wkb_expand(const DifD& s0_prime, std::size_t orders) {
    if (orders < 1) throw ParameterError("wkb: orders must be at least 1");
    const double s0 = s0_prime.value();
    if (!(s0 > 0.0)) throw DomainError("wkb: S0' must be positive at the expansion point, got " + to_text(s0));

    const auto derive = [](const DifD& d) { return shift(d); };
    const DifD minus_half = DifD::constant(-0.5);

    DifSeries v_prime = DifSeries::declare("wkb.v'");
    DifSeries u = scale(minus_half, log(DifSeries::cons(s0_prime, v_prime)));
    DifSeries u_prime = smap(derive, u);
    DifSeries rhs = add_to_tail(add(mul(u_prime, u_prime), smap(derive, u_prime)), mul(v_prime, v_prime));
    v_prime.define(scale(div(minus_half, s0_prime), rhs));

    const auto main = [](const DifD& d) { return d.value(); };
    WkbResult result{u, v_prime, smap(main, u), smap(main, v_prime)};
    result.u_main.take(orders);
    result.v_prime_main.take(orders);
    return result;
}

DifD airy_s0_prime(double x0) {
    if (!(x0 > 0.0)) throw DomainError("airy: x0 must be positive, got " + to_text(x0));
    return sqrt(DifD::variable(x0));
}

}  // namespace corec::wkb
