#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gconvex {

// Common base so the CLI can map every library failure to one exit path.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed expression text. `offset` is the byte position of the first
// offending character (or text.size() for unexpected end of input).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Evaluation left the function's natural domain (log of nonpositive,
// sqrt of negative, division by zero, 0^negative, non-finite result).
class EvalError : public Error {
public:
    EvalError(const std::string& what, double x) : Error(what), x_(x) {}
    double x() const { return x_; }

private:
    double x_;
};

// Argument outside the range of an invertible function.
class RangeError : public Error {
public:
    using Error::Error;
};

// A stated precondition failed; the message names the condition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Iterative method failed to converge.
class NumericalError : public Error {
public:
    using Error::Error;
};

// Bad user-facing input: matrix files, norm specs, CLI values.
class InputError : public Error {
public:
    using Error::Error;
};

}  // namespace gconvex
