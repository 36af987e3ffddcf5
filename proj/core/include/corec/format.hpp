#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "corec/rational.hpp"

namespace corec {

/// Shortest decimal that reads back to the same double.
std::string to_text(double x);
/// "p/q", or "p" for integers.
std::string to_text(const BigRational& x);
std::string to_text(const BigInt& x);

template <class T>
std::vector<std::string> to_text(const std::vector<T>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(to_text(v));
    return out;
}

/// One value per line.
void write_plain(std::ostream& os, const std::vector<std::string>& values);
/// Header "index,value", then "k,value_k".
void write_csv(std::ostream& os, const std::vector<std::string>& values);

}  // namespace corec
