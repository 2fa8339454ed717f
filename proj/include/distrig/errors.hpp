#pragma once

#include <stdexcept>
#include <string>

namespace distrig {

// Malformed input file or value. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// Enumeration would exceed the configured tuple budget.
class BudgetError : public std::runtime_error {
public:
  BudgetError(const std::string& what, unsigned long long required, unsigned long long budget)
      : std::runtime_error(what), required_(required), budget_(budget) {}
  unsigned long long required() const noexcept { return required_; }
  unsigned long long budget() const noexcept { return budget_; }

private:
  unsigned long long required_;
  unsigned long long budget_;
};

// Caller violated an operation's precondition (dimension mismatch, singular tuple, ...).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace distrig
