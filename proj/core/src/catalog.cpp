#include "corec/catalog.hpp"

#include <utility>

#include "corec/format.hpp"

namespace corec::catalog {

Stream<BigInt> ones() { return repeat(BigInt(1)); }

Stream<BigInt> integs() {
    auto one = ones();
    return Stream<BigInt>::fix([one](const Stream<BigInt>& self) { return cons(BigInt(1), self + one); },
                               "integs");
}

Stream<BigInt> fibs() {
    auto fib = Stream<BigInt>::declare("fibs");
    auto ftail = Stream<BigInt>::declare("fibs.tail");
    fib.define(cons(BigInt(0), ftail));
    ftail.define(cons(BigInt(1), fib + ftail));
    return fib;
}

namespace {

using RSeries = Series<BigRational>;

RSeries partition_member(std::size_t m, const std::shared_ptr<std::size_t>& members) {
    if (members) ++*members;
    RSeries p = RSeries::declare("partitions.b");
    auto next = RSeries::lazy([m, members] { return partition_member(m + 1, members); }, "partitions.b");
    p.define(RSeries::cons(BigRational(1), add(next, mul(monomial<BigRational>(m - 1), p))));
    return p;
}

}  // namespace

Series<BigRational> partitions(std::shared_ptr<std::size_t> members) {
    return RSeries::cons(BigRational(1), RSeries::lazy([members] { return partition_member(1, members); }));
}

Series<BigRational> bessel_series() {
    RSeries w = RSeries::declare("bessel");
    const BigRational minus_quarter = BigRational::from_parts(-1, 4);
    RSeries x2_w2 = RSeries::cons(BigRational(0), RSeries::cons(BigRational(0), derivative(derivative(w))));
    w.define(integral(BigRational(1), sub(scale(minus_quarter, w), x2_w2)));
    return w;
}

Series<BigRational> exp_demo() { return exp(RSeries::from({BigRational(0), BigRational(1)})); }

Series<BigRational> revser_demo() {
    return revert(RSeries::from({BigRational(0), BigRational(1), BigRational(1)}));
}

const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> all = {
        {"integs", Domain::exact, [] { return CatalogValue(integs()); }},
        {"fibs", Domain::exact, [] { return CatalogValue(fibs()); }},
        {"partitions", Domain::exact, [] { return CatalogValue(partitions()); }},
        {"bessel", Domain::exact, [] { return CatalogValue(bessel_series()); }},
        {"exp-demo", Domain::exact, [] { return CatalogValue(exp_demo()); }},
        {"revser-demo", Domain::exact, [] { return CatalogValue(revser_demo()); }},
    };
    return all;
}

const CatalogEntry* find(const std::string& name) {
    for (const auto& e : entries()) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

std::vector<std::string> render(const CatalogEntry& entry, std::size_t n) {
    return std::visit([n](const auto& value) { return to_text(take(n, value)); }, entry.producer());
}

}  // namespace corec::catalog
