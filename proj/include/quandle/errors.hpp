#pragma once

#include <stdexcept>
#include <string>

namespace quandle {

// Malformed textual input: table files, link files, PD codes, polynomial
// text. The CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Well-formed input that violates an operation's domain: not a quandle,
// subset not closed, bad evaluation point, order above a supported bound.
// The CLI maps this to exit code 1.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace quandle
