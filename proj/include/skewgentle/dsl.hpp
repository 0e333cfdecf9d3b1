#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "skewgentle/quiver.hpp"

namespace skewgentle {

/// Syntax or semantic error in a quiver document, with 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                           message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

/// Grammar:
///   file   := stmt+
///   stmt   := "vertices" ident+ ";" | "arrow" ident ":" ident "->" ident ";"
///           | "rel" ["-"] term (("+"|"-") term)* ";" | "special" ident+ ";"
///   term   := (coef "*")? ident ("*" ident)*
///   coef   := int | int "/" int
/// `#` starts a comment running to end of line. Identifiers are [A-Za-z0-9_]+;
/// arrow names must not be purely numeric. Names must be declared before use.
QuiverSpec parse_quiver(std::string_view text);

/// Canonical text: one `vertices` line, then arrows, relations and `special`
/// in declaration order.
std::string serialize_quiver(const QuiverSpec& spec);

QuiverSpec read_quiver_file(const std::string& path);

}  // namespace skewgentle
