#include "ord/ordinal.hpp"

#include <algorithm>
#include <utility>

#include "ord/errors.hpp"

namespace ord {

namespace {

const Ordinal::TermList& empty_terms() {
  static const Ordinal::TermList empty;
  return empty;
}

}  // namespace

Ordinal make_ordinal_unchecked(Ordinal::TermList terms) {
  if (terms.empty()) return Ordinal{};
  return Ordinal{std::make_shared<const Ordinal::TermList>(std::move(terms))};
}

Ordinal Ordinal::from_nat(Nat n) {
  if (n == 0) return Ordinal{};
  TermList terms;
  terms.push_back({Ordinal{}, std::move(n)});
  return make_ordinal_unchecked(std::move(terms));
}

Ordinal Ordinal::omega() {
  static const Ordinal w = power(from_nat(1));
  return w;
}

Ordinal Ordinal::power(const Ordinal& exponent) {
  TermList terms;
  terms.push_back({exponent, 1});
  return make_ordinal_unchecked(std::move(terms));
}

Ordinal Ordinal::term(const Ordinal& exponent, Nat coefficient) {
  if (coefficient == 0) return Ordinal{};
  TermList terms;
  terms.push_back({exponent, std::move(coefficient)});
  return make_ordinal_unchecked(std::move(terms));
}

Ordinal Ordinal::from_terms(TermList terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) {
      throw PreconditionError("ordinal term with coefficient < 1");
    }
    if (i + 1 < terms.size() &&
        compare(terms[i].exponent, terms[i + 1].exponent) <= 0) {
      throw PreconditionError("ordinal exponents not strictly decreasing");
    }
  }
  return make_ordinal_unchecked(std::move(terms));
}

bool Ordinal::is_finite() const {
  if (is_zero()) return true;
  return term_count() == 1 && leading_term().exponent.is_zero();
}

Nat Ordinal::to_nat() const {
  if (is_zero()) return 0;
  if (!is_finite()) throw PreconditionError("to_nat on an infinite ordinal");
  return leading_term().coefficient;
}

const Ordinal::TermList& Ordinal::terms() const {
  return terms_ ? *terms_ : empty_terms();
}

const Ordinal::Term& Ordinal::leading_term() const { return terms().front(); }

const Ordinal::Term& Ordinal::last_term() const { return terms().back(); }

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = compare(ta[i].exponent, tb[i].exponent);
    if (c != std::strong_ordering::equal) return c;
    if (ta[i].coefficient != tb[i].coefficient) {
      return ta[i].coefficient < tb[i].coefficient ? std::strong_ordering::less
                                                   : std::strong_ordering::greater;
    }
  }
  return ta.size() <=> tb.size();
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Ordinal& lead_exp = b.leading_term().exponent;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  Ordinal::TermList out;
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0;
  while (i < ta.size() && compare(ta[i].exponent, lead_exp) > 0) {
    out.push_back(ta[i]);
    ++i;
  }
  if (i < ta.size() && ta[i].exponent == lead_exp) {
    out.push_back({lead_exp, ta[i].coefficient + tb[0].coefficient});
    out.insert(out.end(), tb.begin() + 1, tb.end());
  } else {
    out.insert(out.end(), tb.begin(), tb.end());
  }
  return make_ordinal_unchecked(std::move(out));
}

Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  Ordinal::TermList out;
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  while (i < ta.size() && j < tb.size()) {
    auto c = compare(ta[i].exponent, tb[j].exponent);
    if (c == std::strong_ordering::greater) {
      out.push_back(ta[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back(tb[j++]);
    } else {
      out.push_back({ta[i].exponent, ta[i].coefficient + tb[j].coefficient});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), ta.begin() + i, ta.end());
  out.insert(out.end(), tb.begin() + j, tb.end());
  return make_ordinal_unchecked(std::move(out));
}

Ordinal multiply(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal{};
  const auto& lead = a.leading_term();
  Ordinal acc;
  for (const auto& t : b.terms()) {
    Ordinal piece;
    if (t.exponent.is_zero()) {
      // a * k: the leading coefficient scales, the tail of a is kept.
      Ordinal::TermList ts(a.terms());
      ts[0].coefficient = lead.coefficient * t.coefficient;
      piece = make_ordinal_unchecked(std::move(ts));
    } else {
      piece = Ordinal::term(add(lead.exponent, t.exponent), t.coefficient);
    }
    acc = add(acc, piece);
  }
  return acc;
}

Nat max_coefficient(const Ordinal& a) {
  Nat best = 0;
  for (const auto& t : a.terms()) {
    if (t.coefficient > best) best = t.coefficient;
    Nat sub = max_coefficient(t.exponent);
    if (sub > best) best = std::move(sub);
  }
  return best;
}

OrdinalKind classify(const Ordinal& a) {
  if (a.is_zero()) return OrdinalKind::Zero;
  return a.last_term().exponent.is_zero() ? OrdinalKind::Successor
                                          : OrdinalKind::Limit;
}

Ordinal predecessor(const Ordinal& a) {
  if (classify(a) != OrdinalKind::Successor) {
    throw PreconditionError("predecessor of a non-successor ordinal");
  }
  Ordinal::TermList out(a.terms());
  if (out.back().coefficient > 1) {
    out.back().coefficient -= 1;
  } else {
    out.pop_back();
  }
  return make_ordinal_unchecked(std::move(out));
}

Ordinal omega_tower(const Nat& height, const Ordinal& a, const Limits& limits) {
  if (height > limits.max_tower_height) {
    throw ResourceLimitError("omega tower height exceeds cap");
  }
  auto h = static_cast<std::size_t>(height);
  Ordinal out = a;
  for (std::size_t i = 0; i < h; ++i) {
    out = Ordinal::power(out);
  }
  return out;
}

std::size_t exponent_height(const Ordinal& a) {
  std::size_t best = 0;
  for (const auto& t : a.terms()) {
    if (!t.exponent.is_zero()) {
      best = std::max(best, 1 + exponent_height(t.exponent));
    }
  }
  return best;
}

std::string render(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += '+';
    first = false;
    const Ordinal& e = t.exponent;
    if (e.is_zero()) {
      out += t.coefficient.str();
      continue;
    }
    out += 'w';
    if (e.is_finite()) {
      if (e.to_nat() != 1) {
        out += '^';
        out += e.to_nat().str();
      }
    } else if (e == Ordinal::omega()) {
      out += "^w";
    } else {
      out += "^(";
      out += render(e);
      out += ')';
    }
    if (t.coefficient != 1) {
      out += '*';
      out += t.coefficient.str();
    }
  }
  return out;
}

}  // namespace ord
