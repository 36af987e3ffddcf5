#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "corec/corec.hpp"

namespace corec::cli {

namespace {

enum class Format { plain, csv };

const std::map<std::string, Format> format_names = {{"plain", Format::plain}, {"csv", Format::csv}};

void emit(std::ostream& os, Format format, const std::vector<std::string>& values) {
    if (format == Format::csv) {
        write_csv(os, values);
    } else {
        write_plain(os, values);
    }
}

struct AudioOptions {
    std::string kind;
    std::string out;
    std::uint32_t rate = 44100;
    double dur = 1.0;
    double freq = 440.0;
    std::uint64_t seed = 1;
    std::optional<std::size_t> len;
    double b = 0.5;
    std::size_t m = 7;
};

dsp::SampleStream ks_string(const AudioOptions& o) {
    const std::size_t length =
        o.len ? *o.len : static_cast<std::size_t>(std::lround(o.rate / o.freq - 0.5));
    return dsp::karplus_strong(take(length, dsp::noise(o.seed)));
}

dsp::SampleStream audio_stream(const AudioOptions& o) {
    const double h = 2.0 * std::numbers::pi * o.freq / o.rate;
    if (o.kind == "sine") return dsp::sine_gen(h);
    if (o.kind == "euler") return dsp::euler_osc(h);
    if (o.kind == "vibrato") {
        const double slow = 2.0 * std::numbers::pi * 5.0 / o.rate;
        auto mod = repeat(1.0) + scale(0.05, dsp::sine_gen(slow));
        return dsp::vibrato(h, mod);
    }
    if (o.kind == "ks") return ks_string(o);
    return dsp::allpass(o.m, o.b, ks_string(o));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Co-recursive series, derivative towers and sample streams", "corec"};
    app.require_subcommand(1);

    std::ostringstream buffer;
    std::function<void()> action;

    // series
    std::string series_name;
    std::size_t series_n = 10;
    Format series_format = Format::plain;
    std::vector<std::string> names;
    for (const auto& e : catalog::entries()) names.push_back(e.name);
    auto* series = app.add_subcommand("series", "Print a catalog sequence");
    series->add_option("name", series_name, "Sequence name")->required()->check(CLI::IsMember(names));
    series->add_option("--n", series_n, "Number of terms")->capture_default_str();
    series->add_option("--format", series_format, "plain or csv")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    series->callback([&] {
        action = [&] { emit(buffer, series_format, catalog::render(*catalog::find(series_name), series_n)); };
    });

    // lambertw
    std::size_t lambert_n = 8;
    Format lambert_format = Format::plain;
    auto* lambertw = app.add_subcommand("lambertw", "Derivatives of the Lambert W function at 0");
    lambertw->add_option("--n", lambert_n, "Number of tower elements")->capture_default_str();
    lambertw->add_option("--format", lambert_format, "plain or csv")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    lambertw->callback([&] {
        action = [&] { emit(buffer, lambert_format, to_text(lambert_w().take(lambert_n))); };
    });

    // qft
    std::size_t qft_g = 2;
    std::size_t qft_order = 12;
    Format qft_format = Format::csv;
    auto* qft_cmd = app.add_subcommand("qft", "Connected Green function G_n as a series in the coupling");
    qft_cmd->add_option("--g", qft_g, "Number of external legs n (>= 2)")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
    qft_cmd->add_option("--order", qft_order, "Highest power of the coupling")->capture_default_str();
    qft_cmd->add_option("--format", qft_format, "plain or csv")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    qft_cmd->callback([&] {
        action = [&] { emit(buffer, qft_format, to_text(qft::greens(qft_g).take(qft_order + 1))); };
    });

    // wkb
    double wkb_x0 = 1.0;
    std::size_t wkb_orders = 4;
    auto* wkb_cmd = app.add_subcommand("wkb", "WKB U and V' coefficients for Q(x) = x");
    wkb_cmd->add_option("--x0", wkb_x0, "Expansion point (> 0)")->capture_default_str();
    wkb_cmd->add_option("--orders", wkb_orders, "Number of orders in eps^2")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    wkb_cmd->callback([&] {
        action = [&] {
            const auto r = wkb::wkb_expand(wkb::airy_s0_prime(wkb_x0), wkb_orders);
            const auto u = r.u_main.take(wkb_orders);
            const auto v = r.v_prime_main.take(wkb_orders);
            buffer << "index,u,vprime\n";
            for (std::size_t k = 0; k < wkb_orders; ++k) {
                buffer << k << ',' << to_text(u[k]) << ',' << to_text(v[k]) << '\n';
            }
        };
    });

    // audio
    AudioOptions audio_opts;
    auto* audio = app.add_subcommand("audio", "Render a sample stream to a 16-bit mono WAV file");
    audio->add_option("kind", audio_opts.kind, "Generator")
        ->required()
        ->check(CLI::IsMember({"sine", "euler", "vibrato", "ks", "allpass-demo"}));
    audio->add_option("--out", audio_opts.out, "Output path")->required();
    audio->add_option("--rate", audio_opts.rate, "Samples per second")
        ->capture_default_str()
        ->check(CLI::Range(std::uint32_t{1}, std::uint32_t{768000}));
    audio->add_option("--dur", audio_opts.dur, "Duration in seconds")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    audio->add_option("--freq", audio_opts.freq, "Frequency in Hz")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    audio->add_option("--seed", audio_opts.seed, "Noise seed")->capture_default_str();
    audio->add_option("--len", audio_opts.len, "Karplus-Strong delay length");
    audio->add_option("--b", audio_opts.b, "All-pass coefficient")->capture_default_str();
    audio->add_option("--m", audio_opts.m, "All-pass delay")->capture_default_str();
    audio->callback([&] {
        action = [&] {
            dsp::write_wav(audio_opts.out, audio_opts.rate, audio_stream(audio_opts), audio_opts.dur);
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        action();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_compute;
    }
    out << buffer.str();
    return exit_ok;
}

}  // namespace corec::cli
