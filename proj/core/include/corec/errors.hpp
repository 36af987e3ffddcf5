#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace corec {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A lazy cell was re-entered while its own producer was running: the
/// definition borrows an element it has not produced yet.
class NonProductiveError : public Error {
public:
    NonProductiveError(std::string op, std::size_t index)
        : Error("non-productive definition: " + op + " cell " + std::to_string(index) +
                " re-entered while being evaluated"),
          op_(std::move(op)),
          index_(index) {}

    const std::string& op() const noexcept { return op_; }
    std::size_t index() const noexcept { return index_; }

private:
    std::string op_;
    std::size_t index_;
};

/// Scalar precondition violated (log of a non-positive value, singular head, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Exact division by zero, or a series divisor with a vanishing head.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// Invalid construction parameter (delay length, filter coefficient, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

class FileError : public Error {
public:
    using Error::Error;
};

}  // namespace corec
