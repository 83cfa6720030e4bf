#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twistvol {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed PD text or JSON. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Well-formed input that does not describe a link diagram.
class ValidityError : public Error {
 public:
  using Error::Error;
};

// The rotation system is not a planar embedding.
class EmbeddingError : public ValidityError {
 public:
  using ValidityError::ValidityError;
};

// Argument outside the domain of a numerical function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The rho-hat equation has no root with rho-hat >= 0.531.
class NoSolutionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The diagram does not meet the hypotheses of the bound (tw < 2, split diagram, ...).
class InapplicableError : public Error {
 public:
  using Error::Error;
};

}  // namespace twistvol
