#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = corec::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::filesystem::path scratch(const char* name) {
    auto dir = std::filesystem::temp_directory_path() / "corec_test_cli";
    std::filesystem::create_directories(dir);
    auto p = dir / name;
    std::filesystem::remove(p);
    return p;
}

}  // namespace

TEST_CASE("series partitions") {
    const auto r = run({"series", "partitions", "--n", "17"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n1\n2\n3\n5\n7\n11\n15\n22\n30\n42\n56\n77\n101\n135\n176\n231\n");
    CHECK(r.err.empty());
}

TEST_CASE("series bessel") {
    CHECK(run({"series", "bessel", "--n", "5"}).out == "1\n-1/4\n1/32\n-3/128\n75/2048\n");
}

TEST_CASE("series formats and names") {
    CHECK(run({"series", "fibs", "--n", "4", "--format", "csv"}).out == "index,value\n0,0\n1,1\n2,1\n3,2\n");
    CHECK(run({"series", "integs", "--n", "3"}).out == "1\n2\n3\n");
    CHECK(run({"series", "exp-demo", "--n", "4"}).out == "1\n1\n1/2\n1/6\n");
    CHECK(run({"series", "revser-demo", "--n", "6"}).out == "0\n1\n-1\n2\n-5\n14\n");
    CHECK(run({"series", "bessel", "--n", "0"}).out.empty());
}

TEST_CASE("qft") {
    const auto r = run({"qft", "--g", "2", "--order", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("index,value\n0,1\n1,0\n2,1\n", 0) == 0);
    CHECK(r.out.size() >= 16);
    CHECK(r.out.substr(r.out.size() - 16) == "12,7040125/1024\n");
    CHECK(run({"qft", "--g", "4", "--order", "8", "--format", "plain"}).out == "0\n0\n1/2\n0\n4\n0\n525/16\n0\n300\n");
}

TEST_CASE("lambertw") {
    CHECK(run({"lambertw", "--n", "5"}).out == "0\n1\n-2\n9\n-64\n");
    CHECK(run({"lambertw", "--n", "2", "--format", "csv"}).out == "index,value\n0,0\n1,1\n");
}

TEST_CASE("wkb") {
    const auto r = run({"wkb", "--x0", "1", "--orders", "2"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header == "index,u,vprime");
    CHECK(first.substr(first.rfind(',') + 1) == "-0.15625");
}

TEST_CASE("usage errors exit 1 and print nothing to stdout") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{}, {"frobnicate"}, {"series"}, {"series", "nope"}, {"series", "fibs", "--n", "x"},
          {"series", "fibs", "--bogus"}, {"qft", "--g", "1"}, {"series", "fibs", "--format", "xml"},
          {"audio", "sine"}, {"audio", "organ", "--out", "x.wav"}, {"wkb", "--orders", "0"}}) {
        const auto r = run(args);
        CHECK(r.code == 1);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("computation errors exit 2") {
    const auto r = run({"wkb", "--x0", "-1"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("x0") != std::string::npos);

    const std::string bad = "/nonexistent-dir/sub/out.wav";
    CHECK(run({"audio", "sine", "--out", bad, "--dur", "0.01"}).code == 2);
    CHECK_FALSE(std::filesystem::exists(bad));
    CHECK_FALSE(std::filesystem::exists(bad + ".tmp"));
}

TEST_CASE("help exits 0") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("series") != std::string::npos);
    CHECK(run({"qft", "--help"}).code == 0);
}

TEST_CASE("audio ks reproduces the golden file") {
    const auto p = scratch("ks.wav");
    const auto r = run({"audio", "ks", "--out", p.string(), "--rate", "8000", "--dur", "0.05", "--seed", "1", "--len", "20"});
    CHECK(r.code == 0);
    CHECK(slurp(p) == slurp(std::filesystem::path(COREC_TEST_DATA) / "ks_seed1_len20_8000hz.wav"));
}

TEST_CASE("every audio kind renders deterministically") {
    for (const char* kind : {"sine", "euler", "vibrato", "ks", "allpass-demo"}) {
        const auto a = scratch("a.wav"), b = scratch("b.wav");
        CHECK(run({"audio", kind, "--out", a.string(), "--rate", "8000", "--dur", "0.1"}).code == 0);
        CHECK(run({"audio", kind, "--out", b.string(), "--rate", "8000", "--dur", "0.1"}).code == 0);
        const auto bytes = slurp(a);
        CHECK(bytes.size() == 44 + 2 * 800);
        CHECK(bytes == slurp(b));
    }
}

TEST_CASE("stdout is deterministic") {
    CHECK(run({"qft", "--g", "3", "--order", "9"}).out == run({"qft", "--g", "3", "--order", "9"}).out);
    CHECK(run({"wkb", "--x0", "2"}).out == run({"wkb", "--x0", "2"}).out);
}
