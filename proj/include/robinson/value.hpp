#ifndef ROBINSON_VALUE_HPP
#define ROBINSON_VALUE_HPP

#include <array>
#include <cctype>
#include <string>
#include <string_view>

#include "robinson/base.hpp"

namespace robinson {

inline constexpr int kDefaultPrecision = 6;
inline constexpr int kMaxPrecision = 12;

namespace detail {
inline constexpr std::array<std::int64_t, kMaxPrecision + 1> kPow10 = {
    1LL,          10LL,          100LL,          1000LL,
    10000LL,      100000LL,      1000000LL,      10000000LL,
    100000000LL,  1000000000LL,  10000000000LL,  100000000000LL,
    1000000000000LL};
}

/// Parses a decimal literal with at most `precision` fractional digits into a
/// Value scaled by 10^precision. Inputs with more fractional digits than the
/// precision allows are rejected rather than rounded.
inline Value parse_value(std::string_view text, int precision = kDefaultPrecision) {
    if (precision < 0 || precision > kMaxPrecision)
        throw ParseError("precision out of range");
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    const std::int64_t scale = detail::kPow10[static_cast<std::size_t>(precision)];
    const std::int64_t limit = INT64_MAX / scale;
    std::int64_t whole = 0;
    std::size_t digits = 0;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, ++digits) {
        if (whole > (limit - 9) / 10)
            throw ParseError("value too large: '" + std::string(text) + "'");
        whole = whole * 10 + (text[i] - '0');
    }
    std::int64_t frac = 0;
    std::size_t frac_digits = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, ++frac_digits) {
            if (frac_digits < static_cast<std::size_t>(precision))
                frac = frac * 10 + (text[i] - '0');
            else if (text[i] != '0')
                throw ParseError("value '" + std::string(text) +
                                 "' exceeds precision of " + std::to_string(precision) +
                                 " fractional digits");
        }
    }
    if (digits == 0 && frac_digits == 0)
        throw ParseError("malformed value: '" + std::string(text) + "'");
    if (i != text.size())
        throw ParseError("malformed value: '" + std::string(text) + "'");
    const std::int64_t pad =
        detail::kPow10[static_cast<std::size_t>(precision) -
                       std::min(frac_digits, static_cast<std::size_t>(precision))];
    Value v = whole * scale + frac * pad;
    return negative ? -v : v;
}

/// Formats a scaled Value back to its minimal decimal form ("2", "1.5").
inline std::string format_value(Value v, int precision = kDefaultPrecision) {
    if (precision < 0 || precision > kMaxPrecision)
        throw ParseError("precision out of range");
    const std::int64_t scale = detail::kPow10[static_cast<std::size_t>(precision)];
    std::string sign = v < 0 ? "-" : "";
    std::uint64_t mag = v < 0 ? -static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    std::uint64_t whole = mag / static_cast<std::uint64_t>(scale);
    std::uint64_t frac = mag % static_cast<std::uint64_t>(scale);
    if (frac == 0) return sign + std::to_string(whole);
    std::string f = std::to_string(frac);
    f.insert(0, static_cast<std::size_t>(precision) - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    return sign + std::to_string(whole) + "." + f;
}

}  // namespace robinson

#endif
