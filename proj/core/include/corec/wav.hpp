#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "corec/dsp.hpp"

namespace corec::dsp {

/// Clamp to [−1, 1], scale by 32767, round to nearest.
std::int16_t quantize(double sample);

/// Complete RIFF/WAVE image: PCM format 1, mono, 16-bit little-endian.
std::vector<std::uint8_t> wav_bytes(std::uint32_t rate, const SampleStream& s, std::size_t frames);

/// Writes ⌊rate·seconds⌋ frames of s. The file appears atomically: data goes
/// to a sibling temporary that is renamed on success. Throws FileError.
void write_wav(const std::filesystem::path& path, std::uint32_t rate, const SampleStream& s,
               double seconds);

}  // namespace corec::dsp
