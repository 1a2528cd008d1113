#pragma once

#include <stdexcept>
#include <string>

namespace liftkit {

// Malformed textual/JSON input.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Violated operation precondition (division by zero, zero polynomial, ...).
struct PreconditionError : std::domain_error {
    explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

// A constructive factorization could not be completed.
struct FactorError : std::runtime_error {
    explicit FactorError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace liftkit
