#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arrowlab {

// Malformed input: bad vertex ids, missing marks, duplicate edges.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An operation was called outside its documented domain.
class PreconditionViolated : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The backtracking search ran out of nodes before reaching a decision.
// Never a "no" answer.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::size_t nodes)
      : std::runtime_error("search budget exhausted after " + std::to_string(nodes) + " nodes"),
        nodes_(nodes) {}
  std::size_t nodes() const { return nodes_; }

 private:
  std::size_t nodes_;
};

// A construction produced a result violating its own guarantee.
class ConstructionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace arrowlab
