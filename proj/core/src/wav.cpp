#include "corec/wav.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>
#include <system_error>

#include "corec/errors.hpp"

namespace corec::dsp {

namespace {

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xFFU));
    out.push_back(static_cast<std::uint8_t>(v >> 8U));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int shift = 0; shift < 32; shift += 8) out.push_back(static_cast<std::uint8_t>((v >> shift) & 0xFFU));
}

void put_tag(std::vector<std::uint8_t>& out, const char (&tag)[5]) { out.insert(out.end(), tag, tag + 4); }

}  // namespace

std::int16_t quantize(double sample) {
    const double clamped = std::clamp(sample, -1.0, 1.0);
    return static_cast<std::int16_t>(std::lround(clamped * 32767.0));
}

std::vector<std::uint8_t> wav_bytes(std::uint32_t rate, const SampleStream& s, std::size_t frames) {
    if (rate == 0) throw ParameterError("wav: sample rate must be positive");
    const auto data_size = static_cast<std::uint32_t>(frames * 2);
    std::vector<std::uint8_t> out;
    out.reserve(44 + data_size);
    put_tag(out, "RIFF");
    put_u32(out, 36 + data_size);
    put_tag(out, "WAVE");
    put_tag(out, "fmt ");
    put_u32(out, 16);
    put_u16(out, 1);  // PCM
    put_u16(out, 1);  // mono
    put_u32(out, rate);
    put_u32(out, rate * 2);
    put_u16(out, 2);
    put_u16(out, 16);
    put_tag(out, "data");
    put_u32(out, data_size);

    const SampleStream::CellPtr* cur = &s.cell();
    for (std::size_t i = 0; i < frames; ++i) {
        const auto& node = detail::force(*cur);
        put_u16(out, static_cast<std::uint16_t>(quantize(node.head)));
        cur = &node.next;
    }
    return out;
}

void write_wav(const std::filesystem::path& path, std::uint32_t rate, const SampleStream& s, double seconds) {
    if (!(seconds > 0.0)) throw ParameterError("wav: duration must be positive");
    const auto frames = static_cast<std::size_t>(std::floor(static_cast<double>(rate) * seconds));
    const auto bytes = wav_bytes(rate, s, frames);

    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw FileError("cannot open " + tmp.string() + " for writing");
        f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        f.flush();
        if (!f) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw FileError("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw FileError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

}  // namespace corec::dsp
