#include <benchmark/benchmark.h>

#include "corec/corec.hpp"

using namespace corec;

namespace {

using QS = Series<BigRational>;
using DS = Series<double>;

void series_mul_rational(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        const QS ones = QS::fix([](const QS& self) { return QS::cons(BigRational(1), self); });
        benchmark::DoNotOptimize((ones * ones).take(n));
    }
}
BENCHMARK(series_mul_rational)->Arg(32)->Arg(128);

void series_exp_double(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(exp(DS::from({0.0, 1.0, -0.5})).take(n));
}
BENCHMARK(series_exp_double)->Arg(32)->Arg(128);

void partition_numbers(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(catalog::partitions().take(n));
}
BENCHMARK(partition_numbers)->Arg(100)->Arg(200);

void greens_g2(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qft::greens(2).take(n));
}
BENCHMARK(greens_g2)->Arg(13)->Arg(21);

void lambert_tower(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lambert_w().take(n));
}
BENCHMARK(lambert_tower)->Arg(8)->Arg(12);

// exsn's linear pair against the Leibniz product it replaces.
void exsn_pair(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(exsn(Dif<double>::variable(0.7)).take(n));
}
BENCHMARK(exsn_pair)->Arg(10)->Arg(15);

void exsn_naive_product(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        const auto x = Dif<double>::variable(0.7);
        benchmark::DoNotOptimize(mul(sin(x), exp(-x)).take(n));
    }
}
BENCHMARK(exsn_naive_product)->Arg(10)->Arg(15);

void wkb_orders(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(wkb::wkb_expand(wkb::airy_s0_prime(1.0), n).v_prime_main.coeff(n - 1));
}
BENCHMARK(wkb_orders)->DenseRange(2, 6, 2);

void sine_stream(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(take(n, dsp::sine_gen(0.01)));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(sine_stream)->Arg(48000);

void karplus_strong_stream(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(take(n, dsp::karplus_strong(take(100, dsp::noise(1)))));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(karplus_strong_stream)->Arg(44100);

}  // namespace

BENCHMARK_MAIN();
