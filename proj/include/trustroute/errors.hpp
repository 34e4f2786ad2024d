#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trustroute {

// Base for every error raised by the library. The CLI maps these to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A trust or untrust component outside [0,1], or a non-complementary pair in strict mode.
class ValueError : public Error {
public:
    using Error::Error;
};

// Topology text that fails to parse or validate. Carries the 1-based line and offending token.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::string token, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what +
                (token.empty() ? std::string{} : " ('" + token + "')")),
          line_(line), token_(std::move(token)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::size_t line_;
    std::string token_;
};

// Structural problems: unknown nodes, missing edges, unanchored paths, bad topologies.
class TopologyError : public Error {
public:
    using Error::Error;
};

// Path enumeration produced more paths than the configured cap.
class CapExceeded : public Error {
public:
    explicit CapExceeded(std::size_t cap)
        : Error("path enumeration exceeded cap of " + std::to_string(cap) + " paths"), cap_(cap) {}

    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

} // namespace trustroute
