#pragma once

// Cartan-type labels such as "A3", "E8" or "B2xG2". Only the rank is used.

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace steinberg {

namespace detail {

inline unsigned simple_type_rank(std::string_view label)
{
    if (label.size() < 2)
        throw usage_error("malformed Cartan type '" + std::string(label) + "'");
    const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    unsigned n = 0;
    for (char c : label.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c)) || n > 1000)
            throw usage_error("malformed Cartan type '" + std::string(label) + "'");
        n = n * 10 + static_cast<unsigned>(c - '0');
    }
    bool ok = false;
    switch (family) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 3; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: break;
    }
    if (!ok)
        throw usage_error("unknown Cartan type '" + std::string(label) + "'");
    return n;
}

} // namespace detail

// Rank of a Cartan type; products are written with 'x', e.g. "A1xA1".
inline unsigned cartan_rank(std::string_view label)
{
    unsigned total = 0;
    std::size_t start = 0;
    while (true) {
        const std::size_t cut = label.find_first_of("xX", start);
        total += detail::simple_type_rank(label.substr(start, cut - start));
        if (cut == std::string_view::npos)
            return total;
        start = cut + 1;
    }
}

} // namespace steinberg
