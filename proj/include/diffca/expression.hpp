#pragma once

#include <span>
#include <string>
#include <string_view>

#include "diffca/types.hpp"

namespace diffca {

// Dash-separated naturals, e.g. "2-0-1-4" or "[0-]". The dash only
// separates cells; nothing is subtracted at parse time.
//
//   expression := term ('-' term)* ('-')?
//   term       := digit+
//
// Whitespace around the whole string is trimmed and one surrounding pair
// of "[...]" or "(...)" is stripped. Failures throw Error with one of
// empty_expression, invalid_character, empty_term or value_overflow.
InputExpression parse_expression(std::string_view text);

// Terms joined by '-', no trailing separator.
std::string serialize_expression(std::span<const Cell> terms);

inline std::string serialize_expression(const InputExpression& p) {
  return serialize_expression(p.terms);
}

}  // namespace diffca
