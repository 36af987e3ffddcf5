#include "corec/format.hpp"

#include <array>
#include <charconv>
#include <ostream>

namespace corec {

std::string to_text(double x) {
    std::array<char, 64> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), result.ptr);
}

std::string to_text(const BigRational& x) { return x.to_string(); }

std::string to_text(const BigInt& x) { return x.str(); }

void write_plain(std::ostream& os, const std::vector<std::string>& values) {
    for (const auto& v : values) os << v << '\n';
}

void write_csv(std::ostream& os, const std::vector<std::string>& values) {
    os << "index,value\n";
    for (std::size_t k = 0; k < values.size(); ++k) os << k << ',' << values[k] << '\n';
}

}  // namespace corec
