#pragma once

#include <stdexcept>
#include <string>

namespace steinberg {

// Bad arguments: rank mismatch, unknown vertex, malformed input.
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// A construction would exceed one of the size guards.
class resource_error : public std::length_error {
public:
    explicit resource_error(const std::string& what) : std::length_error(what) {}
};

} // namespace steinberg
