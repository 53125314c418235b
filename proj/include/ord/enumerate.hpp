#pragma once

#include <vector>

#include "ord/limits.hpp"
#include "ord/ordinal.hpp"

namespace ord {

// Exhaustive test generator: all ordinals within the given bounds, strictly
// increasing, no duplicates.
//
// Bounds semantics: an ordinal w^{e_1}*K_1 + ... + w^{e_r}*K_r is included
// when the slot count  sum_i ceil(K_i / max_coeff)  is at most max_terms and
// every exponent e_i comes from the single-slot enumeration one height down
// (for height 0 all exponents are 0, so the set is {0, ..., max_terms *
// max_coeff}). Keeping exponents single-slot keeps the space desk-sized while
// still mixing shapes at the top level; the sets are monotone in every bound.
std::vector<Ordinal> enumerate_ordinals(const Nat& max_exp_height,
                                        const Nat& max_terms,
                                        const Nat& max_coeff,
                                        const Limits& limits = default_limits());

}  // namespace ord
