#pragma once

#include <stdexcept>
#include <string>

namespace cdrank {

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Input data that cannot be analysed as-is (non-finite values, missing cells).
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed CSV input. Line and column are 1-based; column 0 means "whole line".
class ParseError : public DataError {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : DataError("line " + std::to_string(line) +
                  (column ? ", column " + std::to_string(column) : std::string{}) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

// Structurally valid data that does not admit the requested analysis (k < 2, N < 2, ...).
class AnalysisError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An iterative numeric routine failed to converge.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace cdrank
