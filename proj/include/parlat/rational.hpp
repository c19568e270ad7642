// Exact rational arithmetic used throughout the symbolic layer.
// Thin layer over boost::rational with parsing/formatting helpers.
#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace parlat {

using Rational = boost::rational<std::int64_t>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return Rational(num, den);
}

// "3", "3/2", "-1/4". Returns nullopt on anything else.
inline std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    bool neg = false;
    if (text[pos] == '-' || text[pos] == '+') {
        neg = text[pos] == '-';
        ++pos;
    }
    auto read_int = [&](std::int64_t& out) -> bool {
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') return false;
        out = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            out = out * 10 + (text[pos] - '0');
            if (out < 0) return false;  // overflow
            ++pos;
        }
        return true;
    };
    std::int64_t num = 0;
    if (!read_int(num)) return std::nullopt;
    std::int64_t den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (!read_int(den) || den == 0) return std::nullopt;
    }
    if (pos != text.size()) return std::nullopt;
    return Rational(neg ? -num : num, den);
}

inline std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace parlat
