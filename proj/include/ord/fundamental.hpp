#pragma once

#include <optional>
#include <vector>

#include "ord/finite_set.hpp"
#include "ord/limits.hpp"
#include "ord/ordinal.hpp"

namespace ord {

// Fundamental sequence step a[x]:
//   0[x] = 0; (a+1)[x] = a;
//   last exponent b+1: one copy of w^(b+1) becomes w^b * x;
//   last exponent limit: one copy of w^e becomes w^(e[x]).
// For x = 0 the vanished term is dropped so the result stays canonical.
Ordinal fund(const Ordinal& a, const Nat& x);

// Full iteration record of a[x_0][x_1]...[x_{k-1}].
struct DescentTrace {
  Ordinal start;
  FiniteSet inputs;
  std::vector<Ordinal> states;  // states[0] == start, size == inputs.size()+1

  const Ordinal& terminal() const { return states.back(); }
  bool reaches_zero() const { return terminal().is_zero(); }
};

DescentTrace fund_iter(const Ordinal& a, const FiniteSet& xs,
                       const Limits& limits = default_limits());

// X is a-large iff iterating a through X ends at 0.
bool is_large(const Ordinal& a, const FiniteSet& xs,
              const Limits& limits = default_limits());

// Least N in [x0, cap] such that the interval [x0, N] is a-large, if any.
// pre: x0 >= 1.
std::optional<Nat> minimal_large_endpoint(const Ordinal& a, const Nat& x0,
                                          const Nat& cap,
                                          const Limits& limits = default_limits());

// Thrice-iterated exponential 2^(2^(2^x)), exact. The result has 2^(2^x)+1
// bits, so the bit cap is checked first.
Nat exp3(const Nat& x, const Limits& limits = default_limits());

// Decides m <= exp3(x) exactly without materializing exp3(x): compares the
// bit length of m against the exponent 2^(2^x), which stays tiny even when
// the power itself could never be stored.
bool le_exp3(const Nat& m, const Nat& x);

// Largeness threshold w^3 * gamma + w^3 + l + 2 used by the descent bound.
Ordinal descent_threshold(const Ordinal& gamma, const Nat& l);

enum class Largeness { Yes, No, Unknown };

// Instance report for the descent bound: if X = {x_0 < ... < x_{|X|-1}} with
// min X > 2 is descent_threshold(gammas[0], l)-large and the gammas are
// strictly decreasing with MC(gamma_i) <= exp3(x_i + l), then the gammas
// cannot outnumber X (conclusion: #gammas - 1 <= |X| - 1).
struct Verify411Report {
  enum class ClaimStatus { Verified, SkippedScale, SkippedPremise };

  Largeness phi_large = Largeness::Unknown;
  bool mc_bounds_hold = false;
  bool strictly_decreasing = false;
  bool conclusion_holds = false;
  // a_0 = 0, a_i = exp3(x_{i+l+1}); present when every index is materializable.
  std::optional<std::vector<Nat>> witness_indices;
  ClaimStatus claim_status = ClaimStatus::SkippedPremise;

  bool premises_hold() const {
    return phi_large == Largeness::Yes && mc_bounds_hold && strictly_decreasing;
  }
};

// Checks the premises and conclusion above on a concrete instance. Iteration
// longer than iter_cap steps reports phi_large = Unknown instead of running.
// Throws FalsificationError if the premises verify but the conclusion fails.
// pre: gammas non-empty, X non-empty with min X > 2.
Verify411Report verify411(const FiniteSet& X, const Nat& l,
                          const std::vector<Ordinal>& gammas, const Nat& iter_cap,
                          const Limits& limits = default_limits());

}  // namespace ord
