#ifndef CCX_PARSER_HPP
#define CCX_PARSER_HPP

#include "ccx/polynomial.hpp"

#include <string_view>

namespace ccx {

// Text grammar for polynomials (UTF-8, whitespace insignificant):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' integer]
//   atom   := number | identifier | '(' expr ')' | '-' factor
//   number := digits ['/' digits]
// Identifiers: D is the polynomial operator symbol, x and y the two bracket
// parameters, x1..x9 the argument parameters; anything else is a free symbol.
Polynomial parse_polynomial(std::string_view text);

// Maps an identifier to its variable (same rules as the grammar).
VarId identifier_to_var(std::string_view ident);

} // namespace ccx

#endif
