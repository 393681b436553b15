#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "nlag/errors.hpp"

namespace nlag {

/// Exact rational coefficient type. All symbolic computation is exact;
/// doubles appear only in the numeric verification layer.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

/// Parses "n", "n/d" or a plain decimal like "-0.25" (converted exactly).
/// Returns nullopt on malformed input or zero denominator.
inline std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    auto digits = [&](std::string& out) {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') out += text[pos++];
        return pos > start;
    };
    std::string whole;
    if (!digits(whole)) return std::nullopt;
    if (pos == text.size()) {
        Rational r{Integer(whole)};
        return negative ? -r : r;
    }
    if (text[pos] == '/') {
        ++pos;
        std::string den;
        if (!digits(den) || pos != text.size()) return std::nullopt;
        Integer d{den};
        if (d == 0) return std::nullopt;
        Rational r{Integer(whole), d};
        return negative ? -r : r;
    }
    if (text[pos] == '.') {
        ++pos;
        std::string frac;
        if (!digits(frac) || pos != text.size()) return std::nullopt;
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Rational r{Integer(whole) * scale + Integer(frac), scale};
        return negative ? -r : r;
    }
    return std::nullopt;
}

} // namespace nlag
