#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grouplab {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a computation would exceed a configured budget
// (group materialization or full subgroup enumeration).
class BudgetError : public Error {
public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
  : Error("line " + std::to_string(line) + ": " + what),
    line_(line)
  {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

} // namespace grouplab
