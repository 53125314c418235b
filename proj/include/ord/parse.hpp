#pragma once

#include <string_view>

#include "ord/limits.hpp"
#include "ord/ordinal.hpp"

namespace ord {

// Ordinal expression grammar:
//
//   expr := term ('+' term)*
//   term := 'w' ('_' nat)? ('^' atom)? ('*' nat)? | nat | tower
//   atom := nat | 'w' | 'w_' nat | '(' expr ')' | tower
//   tower := 'tower' '(' nat ',' expr ')'
//
// 'w_d' is the height-d omega tower; combining '_' and '^' is rejected since
// that would require general ordinal exponentiation. Whitespace is
// insignificant, numerals are arbitrary precision, 'w*0' and the empty input
// denote 0. Sums normalize to CNF (ordinal addition absorbs), so
// parse_ordinal(render(a)) == a for every ordinal a.
// Throws ParseError with position and expected-token info.
Ordinal parse_ordinal(std::string_view text, const Limits& limits = default_limits());

}  // namespace ord
