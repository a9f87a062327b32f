#pragma once

#include <stdexcept>
#include <string>

namespace spinor_gates {

/// Syntax error in an expression, circuit file or job file. Line and column
/// are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                           message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace spinor_gates
