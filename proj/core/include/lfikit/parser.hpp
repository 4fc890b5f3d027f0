#pragma once

// Concrete syntax:
//   formula := iff ; iff := imp ("<->" imp)* ; imp := or ("->" imp)?
//   or := and ("|" and)* ; and := unary ("&" unary)*
//   unary := "~" unary | "o" unary | atom | "(" formula ")"
//   atom := identifier other than the reserved word "o"
// "<->" is sugar for the defined biconditional and expands on parse.

#include <stdexcept>
#include <string>
#include <string_view>

#include "lfikit/formula.hpp"

namespace lfikit {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

Formula parse(std::string_view text);

// Semicolon-separated formula list; empty/blank input yields an empty vector.
std::vector<Formula> parse_list(std::string_view text);

}  // namespace lfikit
