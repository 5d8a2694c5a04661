#pragma once

#include <stdexcept>
#include <string>

namespace soltes {

/// Malformed or out-of-range input (bad vertex index, bad graph6 byte, ...).
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Input is well-formed but outside the operation's mathematical domain
/// (disconnected graph where a connected one is required, non-cubic input
/// to truncation, q outside the feasible interval, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// A configured resource cap was hit (closure size, enumeration scale).
class limit_error : public std::runtime_error {
public:
    explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace soltes
