#pragma once

// Test-only brute-force oracle for ordinals below w^w, as dense coefficient
// vectors (vec[i] = coefficient of w^i). Deliberately shares no code with the
// library so the two routes stay independent.

#include <vector>

#include "ord/nat.hpp"
#include "ord/ordinal.hpp"

namespace oracle {

using ord::Nat;
using Vec = std::vector<Nat>;

inline Vec trim(Vec v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

inline int vec_compare(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  if (b.empty()) return a;
  const std::size_t d = b.size() - 1;
  Vec out = b;
  if (a.size() > d) {
    out[d] += a[d];
    out.resize(std::max(a.size(), out.size()), Nat(0));
    for (std::size_t i = d + 1; i < a.size(); ++i) out[i] = a[i];
  }
  return out;
}

inline Vec vec_natural_sum(const Vec& a, const Vec& b) {
  Vec out(std::max(a.size(), b.size()), Nat(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

inline Vec vec_mul(const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t da = a.size() - 1;
  Vec out(da + b.size(), Nat(0));
  for (std::size_t i = 1; i < b.size(); ++i) out[da + i] = b[i];
  if (b[0] > 0) {
    out[da] = a[da] * b[0];
    for (std::size_t j = 0; j < da; ++j) out[j] = a[j];
  }
  return trim(out);
}

inline Vec vec_fund(Vec a, const Nat& x) {
  a = trim(a);
  if (a.empty()) return a;
  std::size_t i = 0;
  while (a[i] == 0) ++i;
  if (i == 0) {
    a[0] -= 1;
  } else {
    a[i] -= 1;
    a[i - 1] = x;
  }
  return trim(a);
}

inline Nat vec_mc(const Vec& a) {
  Nat best = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (a[i] > best) best = a[i];
    if (Nat(i) > best) best = i;
  }
  return best;
}

// Conversions; pre: every exponent of a is finite.
inline Vec to_vec(const ord::Ordinal& a) {
  Vec out;
  for (const auto& t : a.terms()) {
    const auto e = static_cast<std::size_t>(t.exponent.is_zero()
                                                ? Nat(0)
                                                : t.exponent.to_nat());
    if (out.size() <= e) out.resize(e + 1, Nat(0));
    out[e] = t.coefficient;
  }
  return out;
}

inline ord::Ordinal from_vec(const Vec& v) {
  ord::Ordinal::TermList terms;
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] > 0) {
      terms.push_back({ord::Ordinal::from_nat(Nat(i)), v[i]});
    }
  }
  return ord::Ordinal::from_terms(std::move(terms));
}

}  // namespace oracle
