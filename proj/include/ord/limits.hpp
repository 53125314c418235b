#pragma once

#include <cstddef>

namespace ord {

// Explicit resource caps. Every potentially unbounded computation checks one
// of these and raises ResourceLimitError instead of truncating.
struct Limits {
  // Cap on the CNF term count of any intermediate ordinal.
  std::size_t max_ordinal_terms = 1'000'000;
  // Cap on omega-tower height.
  std::size_t max_tower_height = 4096;
  // Cap on the number of ordinals an enumeration may produce.
  std::size_t max_enumeration = 2'000'000;
  // Cap, in bits, on any single natural number that an operation materializes.
  std::size_t max_nat_bits = std::size_t{1} << 22;
  // Recursion cap for code validation / decoding.
  std::size_t max_code_depth = 10'000;
  // Ground-set cap for the exhaustive homogeneous-set oracle.
  std::size_t max_exhaustive_ground = 24;
  // Node budget for exhaustive coloring searches.
  std::size_t max_search_nodes = 400'000'000;
};

const Limits& default_limits();

}  // namespace ord
