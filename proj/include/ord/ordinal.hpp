#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "ord/limits.hpp"
#include "ord/nat.hpp"

namespace ord {

enum class OrdinalKind { Zero, Successor, Limit };

// Ordinal below epsilon_0 in Cantor normal form:
//
//   w^{e_0} * k_0 + ... + w^{e_n} * k_n
//
// with e_0 > ... > e_n (under this class's own comparison) and every k_i >= 1.
// The empty term list denotes 0. Values are immutable after construction; the
// term list is shared, so copies are cheap and thread-safe.
class Ordinal {
 public:
  struct Term;
  using TermList = std::vector<Term>;

  Ordinal() = default;  // zero

  static Ordinal from_nat(Nat n);
  static Ordinal omega();
  // w^exponent
  static Ordinal power(const Ordinal& exponent);
  // w^exponent * coefficient; a zero coefficient yields 0.
  static Ordinal term(const Ordinal& exponent, Nat coefficient);
  // Validates the CNF invariants; throws PreconditionError on violation.
  static Ordinal from_terms(TermList terms);

  bool is_zero() const { return !terms_ || terms_->empty(); }
  // True for 0 and for single-term ordinals with exponent 0.
  bool is_finite() const;
  Nat to_nat() const;  // pre: is_finite()

  std::size_t term_count() const { return terms_ ? terms_->size() : 0; }
  const TermList& terms() const;
  const Term& leading_term() const;  // pre: !is_zero()
  const Term& last_term() const;     // pre: !is_zero()

 private:
  explicit Ordinal(std::shared_ptr<const TermList> terms) : terms_(std::move(terms)) {}

  std::shared_ptr<const TermList> terms_;  // nullptr encodes zero

  friend Ordinal make_ordinal_unchecked(TermList terms);
};

struct Ordinal::Term {
  Ordinal exponent;
  Nat coefficient;
};

// Internal constructor for callers that guarantee canonical form.
Ordinal make_ordinal_unchecked(Ordinal::TermList terms);

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  return compare(a, b);
}
inline bool operator==(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) == std::strong_ordering::equal;
}

// Ordinal addition: terms of a with exponent below the leading exponent of b
// are absorbed.
Ordinal add(const Ordinal& a, const Ordinal& b);

// Natural (Hessenberg) sum: merges all terms by exponent; nothing is lost.
Ordinal natural_sum(const Ordinal& a, const Ordinal& b);

// Ordinal multiplication, right-distributed over the CNF of b.
Ordinal multiply(const Ordinal& a, const Ordinal& b);

// Largest integer appearing anywhere in the CNF, through exponents.
Nat max_coefficient(const Ordinal& a);

OrdinalKind classify(const Ordinal& a);

// Predecessor of a successor ordinal. pre: classify(a) == Successor.
Ordinal predecessor(const Ordinal& a);

// Iterated omega power: height 0 returns a, height d+1 returns w^(tower d).
Ordinal omega_tower(const Nat& height, const Ordinal& a,
                    const Limits& limits = default_limits());

// Nesting depth of exponents: finite ordinals have height 0, w^w has height 2.
std::size_t exponent_height(const Ordinal& a);

// Canonical text rendering, e.g. "w^2*3+w+4". Inverse of parse_ordinal.
std::string render(const Ordinal& a);

}  // namespace ord
