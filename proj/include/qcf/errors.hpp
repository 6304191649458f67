#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcf {

/// Base of every error thrown by the library. The CLI maps each subclass
/// onto a distinct process exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed element or expansion text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An input violates a documented precondition (mismatched fields, zero
/// divisor, a seed outside the domain of an algorithm, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Expansion loop hit its step cap without detecting a cycle.
class MaxStepsExceeded : public Error {
public:
    using Error::Error;
};

/// A state the mathematics says is unreachable (no lattice candidate, sign
/// refinement past the precision cap, broken conservation law).
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace qcf
