#pragma once

#include <stdexcept>
#include <string>

namespace qchroma {

// Division was requested where the quotient does not exist in the ring.
// Every division in this codebase is backed by a divisibility theorem, so
// this firing means an identity is violated; it is never swallowed.
struct NonExactDivision : std::runtime_error {
    explicit NonExactDivision(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

// Two independent computations of the same value disagreed.
struct RouteMismatch : std::runtime_error {
    explicit RouteMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolation : std::invalid_argument {
    explicit PreconditionViolation(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qchroma
