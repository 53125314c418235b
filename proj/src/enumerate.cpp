#include "ord/enumerate.hpp"

#include <algorithm>

#include "ord/errors.hpp"

namespace ord {

namespace {

// All coefficient assignments for r chosen exponents within `slots` total
// slots, one slot covering a coefficient chunk of size at most max_coeff.
void assign_coefficients(const std::vector<Ordinal>& exps, std::size_t pos,
                         std::size_t slots_left, const Nat& max_coeff,
                         Ordinal::TermList& partial, std::vector<Ordinal>& out,
                         std::size_t cap) {
  if (pos == exps.size()) {
    out.push_back(make_ordinal_unchecked(partial));
    if (out.size() > cap) throw ResourceLimitError("enumeration exceeds cap");
    return;
  }
  const std::size_t remaining = exps.size() - pos - 1;
  for (std::size_t s = 1; s + remaining <= slots_left; ++s) {
    Nat lo = max_coeff * (s - 1) + 1;
    Nat hi = max_coeff * s;
    for (Nat k = lo; k <= hi; ++k) {
      partial.push_back({exps[pos], k});
      assign_coefficients(exps, pos + 1, slots_left - s, max_coeff, partial, out, cap);
      partial.pop_back();
    }
  }
}

// All subsets of `pool` (descending exponent order) of size 1..slots.
void choose_exponents(const std::vector<Ordinal>& pool, std::size_t from,
                      std::size_t slots, const Nat& max_coeff,
                      std::vector<Ordinal>& chosen, std::vector<Ordinal>& out,
                      std::size_t cap) {
  if (!chosen.empty()) {
    Ordinal::TermList partial;
    assign_coefficients(chosen, 0, slots, max_coeff, partial, out, cap);
  }
  if (chosen.size() == slots) return;
  for (std::size_t i = from; i < pool.size(); ++i) {
    chosen.push_back(pool[i]);
    choose_exponents(pool, i + 1, slots, max_coeff, chosen, out, cap);
    chosen.pop_back();
  }
}

std::vector<Ordinal> enumerate_impl(std::size_t height, std::size_t slots,
                                    const Nat& max_coeff, const Limits& limits) {
  std::vector<Ordinal> out;
  out.push_back(Ordinal{});
  if (slots == 0 || max_coeff == 0) return out;

  // Exponent pool: single-slot ordinals one height down; just {0} at height 0.
  std::vector<Ordinal> pool;
  if (height == 0) {
    pool.push_back(Ordinal{});
  } else {
    pool = enumerate_impl(height - 1, 1, max_coeff, limits);
  }
  std::sort(pool.begin(), pool.end(),
            [](const Ordinal& a, const Ordinal& b) { return compare(a, b) > 0; });

  std::vector<Ordinal> chosen;
  choose_exponents(pool, 0, slots, max_coeff, chosen, out, limits.max_enumeration);

  std::sort(out.begin(), out.end(),
            [](const Ordinal& a, const Ordinal& b) { return compare(a, b) < 0; });
  return out;
}

}  // namespace

std::vector<Ordinal> enumerate_ordinals(const Nat& max_exp_height,
                                        const Nat& max_terms, const Nat& max_coeff,
                                        const Limits& limits) {
  if (max_exp_height > 64 || max_terms > 64) {
    throw ResourceLimitError("enumeration bounds too large");
  }
  return enumerate_impl(static_cast<std::size_t>(max_exp_height),
                        static_cast<std::size_t>(max_terms), max_coeff, limits);
}

}  // namespace ord
