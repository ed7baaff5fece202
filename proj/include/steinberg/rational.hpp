#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace steinberg {

using Rational = boost::multiprecision::cpp_rational;

// "num/den" with den > 0, always including the denominator.
inline std::string to_fraction_string(const Rational& q)
{
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace detail {
// Optional sign followed by at least one decimal digit.
inline bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}
} // namespace detail

inline Rational parse_fraction(std::string_view text)
{
    using boost::multiprecision::cpp_int;
    const auto slash = text.find('/');
    if (!detail::is_integer_literal(text.substr(0, slash)) ||
        (slash != std::string_view::npos && !detail::is_integer_literal(text.substr(slash + 1))))
        throw usage_error("malformed rational '" + std::string(text) + "'");
    try {
        if (slash == std::string_view::npos)
            return Rational(cpp_int(std::string(text)));
        const cpp_int num(std::string(text.substr(0, slash)));
        const cpp_int den(std::string(text.substr(slash + 1)));
        if (den == 0)
            throw usage_error("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw usage_error("malformed rational '" + std::string(text) + "'");
    }
}

} // namespace steinberg
