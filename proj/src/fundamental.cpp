#include "ord/fundamental.hpp"

#include <utility>

#include "ord/errors.hpp"
#include "ord/interrupt.hpp"

namespace ord {

Ordinal fund(const Ordinal& a, const Nat& x) {
  if (a.is_zero()) return a;
  Ordinal::TermList out(a.terms());
  Ordinal::Term last = std::move(out.back());
  out.pop_back();
  if (last.exponent.is_zero()) {
    // successor: drop one unit
    if (last.coefficient > 1) {
      last.coefficient -= 1;
      out.push_back(std::move(last));
    }
  } else if (classify(last.exponent) == OrdinalKind::Successor) {
    Ordinal down = predecessor(last.exponent);
    if (last.coefficient > 1) {
      out.push_back({last.exponent, last.coefficient - 1});
    }
    if (x > 0) out.push_back({std::move(down), x});
  } else {
    Ordinal sub = fund(last.exponent, x);
    if (last.coefficient > 1) {
      out.push_back({last.exponent, last.coefficient - 1});
    }
    out.push_back({std::move(sub), 1});
  }
  return make_ordinal_unchecked(std::move(out));
}

DescentTrace fund_iter(const Ordinal& a, const FiniteSet& xs, const Limits& limits) {
  DescentTrace trace;
  trace.start = a;
  trace.inputs = xs;
  trace.states.reserve(xs.size() + 1);
  trace.states.push_back(a);
  Ordinal state = a;
  for (const Nat& x : xs) {
    check_interrupt();
    state = fund(state, x);
    if (state.term_count() > limits.max_ordinal_terms) {
      throw ResourceLimitError("descent trace term count exceeds cap");
    }
    trace.states.push_back(state);
  }
  return trace;
}

bool is_large(const Ordinal& a, const FiniteSet& xs, const Limits& limits) {
  Ordinal state = a;
  for (const Nat& x : xs) {
    if (state.is_zero()) return true;
    state = fund(state, x);
    if (state.term_count() > limits.max_ordinal_terms) {
      throw ResourceLimitError("largeness iteration term count exceeds cap");
    }
  }
  return state.is_zero();
}

std::optional<Nat> minimal_large_endpoint(const Ordinal& a, const Nat& x0,
                                          const Nat& cap, const Limits& limits) {
  if (x0 < 1) throw PreconditionError("minimal_large_endpoint requires x0 >= 1");
  Ordinal state = a;
  if (state.is_zero()) return x0;  // every set is 0-large, [x0, x0] included
  for (Nat x = x0; x <= cap; ++x) {
    check_interrupt();
    state = fund(state, x);
    if (state.term_count() > limits.max_ordinal_terms) {
      throw ResourceLimitError("largeness iteration term count exceeds cap");
    }
    if (state.is_zero()) return x;
  }
  return std::nullopt;
}

Nat exp3(const Nat& x, const Limits& limits) {
  // bits(result) = 2^(2^x) + 1, so 2^x must stay well below the bit cap.
  if (x > 64) throw ResourceLimitError("exp3 argument exceeds bit cap");
  auto xv = static_cast<unsigned>(x);
  if (xv >= 64) throw ResourceLimitError("exp3 argument exceeds bit cap");
  const Nat e1 = Nat(1) << xv;           // 2^x
  if (e1 > limits.max_nat_bits) {
    throw ResourceLimitError("exp3 result exceeds bit cap");
  }
  auto e1v = static_cast<std::size_t>(e1);
  Nat e2 = Nat(1) << e1v;                // 2^(2^x)
  if (e2 > limits.max_nat_bits) {
    throw ResourceLimitError("exp3 result exceeds bit cap");
  }
  return Nat(1) << static_cast<std::size_t>(e2);
}

bool le_exp3(const Nat& m, const Nat& x) {
  if (m <= 1) return true;
  const std::size_t len = bit_length(m);
  // m <= 2^e  iff  bits(m)-1 < e, or bits(m)-1 == e and m is that power.
  // e = 2^(2^x) exceeds any representable bit length once x >= 7.
  if (x >= 7) return true;
  const Nat e = Nat(1) << static_cast<unsigned>(Nat(1) << static_cast<unsigned>(x));
  const Nat top = Nat(len) - 1;
  if (top < e) return true;
  if (top == e) return is_power_of_two(m);
  return false;
}

Ordinal descent_threshold(const Ordinal& gamma, const Nat& l) {
  const Ordinal w3 = Ordinal::power(Ordinal::from_nat(3));
  return add(add(multiply(w3, gamma), w3), Ordinal::from_nat(l + 2));
}

Verify411Report verify411(const FiniteSet& X, const Nat& l,
                          const std::vector<Ordinal>& gammas, const Nat& iter_cap,
                          const Limits& limits) {
  if (gammas.empty()) throw PreconditionError("verify411 requires gammas");
  if (X.empty() || X.min() <= 2) {
    throw PreconditionError("verify411 requires a set strictly above 2");
  }

  Verify411Report report;
  const std::size_t j = gammas.size() - 1;

  report.strictly_decreasing = true;
  for (std::size_t i = 0; i + 1 < gammas.size(); ++i) {
    if (compare(gammas[i], gammas[i + 1]) <= 0) {
      report.strictly_decreasing = false;
      break;
    }
  }

  // MC(gamma_i) <= exp3(x_i + l); unverifiable indices count as failures.
  report.mc_bounds_hold = gammas.size() <= X.size();
  if (report.mc_bounds_hold) {
    for (std::size_t i = 0; i < gammas.size(); ++i) {
      if (!le_exp3(max_coefficient(gammas[i]), X[i] + l)) {
        report.mc_bounds_hold = false;
        break;
      }
    }
  }

  const Ordinal phi0 = descent_threshold(gammas[0], l);
  std::optional<DescentTrace> trace;
  if (Nat(X.size()) > iter_cap) {
    report.phi_large = Largeness::Unknown;
  } else {
    try {
      trace = fund_iter(phi0, X, limits);
      report.phi_large = trace->reaches_zero() ? Largeness::Yes : Largeness::No;
    } catch (const ResourceLimitError&) {
      report.phi_large = Largeness::Unknown;
    }
  }

  report.conclusion_holds = j <= X.size() - 1;

  // Witness indices a_0 = 0, a_i = exp3(x_{i+l+1}).
  bool witnesses_ok = true;
  std::vector<Nat> witnesses;
  witnesses.push_back(0);
  for (std::size_t i = 1; i <= j && witnesses_ok; ++i) {
    Nat idx = Nat(i) + l + 1;
    if (idx >= X.size()) {
      witnesses_ok = false;
      break;
    }
    try {
      witnesses.push_back(exp3(X[static_cast<std::size_t>(idx)], limits));
    } catch (const ResourceLimitError&) {
      witnesses_ok = false;
    }
  }
  if (witnesses_ok) report.witness_indices = std::move(witnesses);

  // The claim compares trace states at the witness indices with the
  // per-gamma thresholds; it needs the witnesses, a materialized trace and
  // witness values within the trace.
  if (!report.premises_hold()) {
    report.claim_status = Verify411Report::ClaimStatus::SkippedPremise;
  } else if (!report.witness_indices || !trace) {
    report.claim_status = Verify411Report::ClaimStatus::SkippedScale;
  } else {
    bool in_range = true;
    for (const Nat& a_i : *report.witness_indices) {
      if (a_i > X.size()) {
        in_range = false;
        break;
      }
    }
    if (!in_range) {
      report.claim_status = Verify411Report::ClaimStatus::SkippedScale;
    } else {
      bool claim_ok = true;
      for (std::size_t i = 1; i <= j; ++i) {
        const auto idx = static_cast<std::size_t>((*report.witness_indices)[i]);
        if (compare(trace->states[idx], descent_threshold(gammas[i], l)) <= 0) {
          claim_ok = false;
          break;
        }
      }
      if (!claim_ok) {
        throw FalsificationError(
            "verify411: witness states do not dominate their thresholds");
      }
      report.claim_status = Verify411Report::ClaimStatus::Verified;
    }
  }

  if (report.premises_hold() && !report.conclusion_holds) {
    throw FalsificationError("verify411: premises hold but gammas outnumber X");
  }
  return report;
}

}  // namespace ord
