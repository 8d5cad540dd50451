#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "acbm/expr.hpp"

namespace acbm {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, int position)
      : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
        position(position) {}
  int position;
};

// Grammar:
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' uint)?
//   atom     := rational | symbol | '(' expr ')' | '-' atom
//   rational := int ('/' uint)?
// Symbols resolve against the table; identifiers found in params instead are
// substituted as rational constants. Unknown identifiers raise ParseError.
ScalarExpr parse_expression(std::string_view text, const SymbolTablePtr& table,
                            const std::map<std::string, Rational>& params = {});

// Same grammar restricted to a constant result (params still substituted).
Rational parse_constant(std::string_view text, const std::map<std::string, Rational>& params = {});

}  // namespace acbm
