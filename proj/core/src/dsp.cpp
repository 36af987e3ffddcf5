#include "corec/dsp.hpp"

#include <cmath>
#include <string>

#include "corec/errors.hpp"

namespace corec::dsp {

SampleStream sine_gen(double h) {
    const double s = std::sin(h);
    const double twice_cos = 2.0 * std::cos(h);
    return SampleStream::fix(
        [=](const SampleStream& y) { return cons(s, scale(twice_cos, y) - cons(0.0, y)); }, "sine");
}

EulerPair euler_pair(double h) {
    auto y = SampleStream::declare("euler.y");
    auto w = SampleStream::declare("euler.w");
    auto u = SampleStream::declare("euler.u");
    y.define(cons(0.0, w));
    w.define(y + scale(h, u));
    u.define(cons(1.0, u - scale(h, w)));
    return {y, u};
}

SampleStream euler_osc(double h) { return euler_pair(h).y; }

SampleStream vibrato(double h, const SampleStream& mod) {
    auto y = SampleStream::declare("vibrato.y");
    auto w = SampleStream::declare("vibrato.w");
    auto u = SampleStream::declare("vibrato.u");
    const auto step = scale(h, mod);
    y.define(cons(0.0, w));
    w.define(y + step * u);
    u.define(cons(1.0, u - step * w));
    return y;
}

SampleStream karplus_strong(const std::vector<double>& excitation, double blend) {
    if (excitation.size() < 2) {
        throw ParameterError("karplus_strong: delay length must be at least 2, got " +
                             std::to_string(excitation.size()));
    }
    auto y = SampleStream::declare("karplus_strong");
    y.define(append_prefix(excitation, scale(blend, y + cons(0.0, y))));
    return y;
}

SampleStream allpass(std::size_t m, double b, const SampleStream& x) {
    if (m < 1) throw ParameterError("allpass: delay must be at least 1");
    if (!(std::fabs(b) < 1.0)) throw ParameterError("allpass: |b| must be below 1");
    auto v = SampleStream::declare("allpass.v");
    auto d = delay(m, v, 0.0);
    v.define(x - scale(b, d));
    return scale(b, v) + d;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double to_unit_sample(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-52 - 1.0;
}

SampleStream noise(std::uint64_t seed) {
    return unfold(seed, [](std::uint64_t state) {
        const std::uint64_t bits = splitmix64(state);
        return std::pair{to_unit_sample(bits), state};
    });
}

}  // namespace corec::dsp
