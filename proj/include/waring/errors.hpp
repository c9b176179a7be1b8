#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace waring {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input violates a mathematical precondition (zero form, bad degree, ...).
struct DomainError : Error {
  using Error::Error;
};

struct ZeroFormError : DomainError {
  ZeroFormError() : DomainError("zero form not allowed here") {}
};

struct DegreeError : DomainError {
  using DomainError::DomainError;
};

struct SingularMatrixError : DomainError {
  SingularMatrixError() : DomainError("coordinate change matrix is singular") {}
};

struct NotABinomialError : DomainError {
  explicit NotABinomialError(int terms)
      : DomainError("form has " + std::to_string(terms) +
                    " terms, expected exactly 2") {}
};

// Randomized search or iteration exhausted its budget.
struct SearchFailedError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

}  // namespace waring
