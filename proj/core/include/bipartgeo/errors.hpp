#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bpg {

// Input file could not be parsed; carries 1-based line/column of the offence.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Counting/sampling work budget exhausted (cap on distinct memo states).
class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(std::size_t budget)
      : std::runtime_error("counting state budget exceeded (" + std::to_string(budget) +
                           " states)"),
        budget_(budget) {}

  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

}  // namespace bpg
