#pragma once

// Sample streams: oscillators and filters written as co-recursive streams.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "corec/lazy.hpp"

namespace corec::dsp {

using SampleStream = Stream<double>;

/// y = sin h : (2cos(h)·y − (0 : y)); element n is sin((n+1)h).
SampleStream sine_gen(double h);

struct EulerPair {
    SampleStream y;  // position
    SampleStream u;  // velocity
};

/// Semi-implicit Euler pair for y'' = −y: y = 0 : w, w = y + h·u, u = 1 : (u − h·w).
EulerPair euler_pair(double h);
SampleStream euler_osc(double h);

/// euler_osc with the step h replaced by h·mod_n at sample n.
SampleStream vibrato(double h, const SampleStream& mod);

/// y = excitation ++ blend·(y + (0 : y)). Requires L = |excitation| ≥ 2.
SampleStream karplus_strong(const std::vector<double>& excitation, double blend = 0.5);

/// v = x − b·d, d = delay m v, y = b·v + d. Requires m ≥ 1, |b| < 1.
SampleStream allpass(std::size_t m, double b, const SampleStream& x);

/// One splitmix64 step: advances state, returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state);

/// Top 53 bits of a splitmix64 output mapped to [−1, 1).
double to_unit_sample(std::uint64_t bits);

/// Reproducible white noise in [−1, 1).
SampleStream noise(std::uint64_t seed);

}  // namespace corec::dsp
