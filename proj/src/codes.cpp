#include "ord/codes.hpp"

#include <utility>

#include "ord/errors.hpp"

namespace ord {

Nat cantor_pair(const Nat& x, const Nat& y) {
  const Nat s = x + y;
  return s * (s + 1) / 2 + y;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& z) {
  const Nat disc = 8 * z + 1;
  Nat s = (boost::multiprecision::sqrt(disc) - 1) / 2;
  while ((s + 1) * (s + 2) / 2 <= z) ++s;
  while (s * (s + 1) / 2 > z) --s;
  const Nat y = z - s * (s + 1) / 2;
  return {s - y, y};
}

Nat project(const Nat& n, const Nat& i, const Nat& payload) {
  if (i < 1 || i > n) throw PreconditionError("projection index out of range");
  Nat cur = payload;
  Nat peels = n - i;
  for (Nat k = 0; k < peels; ++k) cur = cantor_unpair(cur).second;
  if (i == 1) return cur;  // innermost slot is the bare first component
  return cantor_unpair(cur).first;
}

namespace {

// Repack a component list (leading exponent first) into a code.
Nat pack_components(const std::vector<Nat>& comps) {
  if (comps.empty()) return 0;
  Nat payload = comps[0];
  for (std::size_t k = 1; k < comps.size(); ++k) {
    payload = cantor_pair(comps[k], payload);
  }
  return cantor_pair(Nat(comps.size()), payload);
}

bool is_code_rec(const Nat& a, std::size_t depth, const Limits& limits);

// code_less without revalidation; both arguments must be codes.
bool code_less_rec(const Nat& a, const Nat& b) {
  if (a == b) return false;
  if (a == 0) return true;
  if (b == 0) return false;
  const std::vector<Nat> ca = code_components(a);
  const std::vector<Nat> cb = code_components(b);
  const std::size_t n = std::min(ca.size(), cb.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (ca[k] != cb[k]) return code_less_rec(ca[k], cb[k]);
  }
  return ca.size() < cb.size();
}

bool is_code_rec(const Nat& a, std::size_t depth, const Limits& limits) {
  if (depth > limits.max_code_depth) {
    throw ResourceLimitError("code validation recursion exceeds cap");
  }
  if (a == 0) return true;
  const auto [n, payload] = cantor_unpair(a);
  if (n == 0) return false;
  if (n > limits.max_code_depth) {
    throw ResourceLimitError("code component count exceeds cap");
  }
  std::vector<Nat> comps;
  comps.reserve(static_cast<std::size_t>(n));
  Nat cur = payload;
  for (Nat k = n; k > 1; --k) {
    auto [outer, rest] = cantor_unpair(cur);
    comps.push_back(std::move(outer));  // outermost slot holds the last exponent
    cur = rest;
  }
  comps.push_back(std::move(cur));
  // comps is now last exponent first; components must ascend along it.
  for (const Nat& c : comps) {
    if (!is_code_rec(c, depth + 1, limits)) return false;
  }
  for (std::size_t k = 0; k + 1 < comps.size(); ++k) {
    if (code_less_rec(comps[k + 1], comps[k])) return false;
  }
  return true;
}

void require_code(const Nat& a, const Limits& limits) {
  if (!is_code_rec(a, 0, limits)) {
    throw InvalidCodeError(a.str() + " is not an ordinal code");
  }
}

}  // namespace

std::vector<Nat> code_components(const Nat& a) {
  const auto [n, payload] = cantor_unpair(a);
  std::vector<Nat> comps(static_cast<std::size_t>(n));
  Nat cur = payload;
  for (std::size_t k = static_cast<std::size_t>(n); k > 1; --k) {
    auto [outer, rest] = cantor_unpair(cur);
    comps[k - 1] = std::move(outer);
    cur = rest;
  }
  comps[0] = std::move(cur);
  return comps;
}

bool is_code(const Nat& a, const Limits& limits) {
  return is_code_rec(a, 0, limits);
}

bool code_less(const Nat& a, const Nat& b, const Limits& limits) {
  require_code(a, limits);
  require_code(b, limits);
  return code_less_rec(a, b);
}

Nat w_code(const Nat& d) {
  Nat w = cantor_pair(1, 0);
  for (Nat k = 0; k < d; ++k) w = cantor_pair(1, w);
  return w;
}

Nat encode(const Ordinal& a) {
  if (a.is_zero()) return 0;
  std::vector<Nat> comps;
  for (const auto& t : a.terms()) {
    const Nat comp = encode(t.exponent);
    for (Nat k = 0; k < t.coefficient; ++k) comps.push_back(comp);
  }
  return pack_components(comps);
}

Ordinal decode(const Nat& a, const Limits& limits) {
  require_code(a, limits);
  if (a == 0) return Ordinal{};
  Ordinal::TermList terms;
  for (const Nat& comp : code_components(a)) {
    Ordinal exponent = decode(comp, limits);
    if (!terms.empty() && terms.back().exponent == exponent) {
      terms.back().coefficient += 1;
    } else {
      terms.push_back({std::move(exponent), 1});
    }
  }
  return Ordinal::from_terms(std::move(terms));
}

Nat code_fund_stack(const Nat& count, const Nat& b, const Nat& a) {
  Nat r = cantor_unpair(cantor_unpair(a).second).second;
  for (Nat k = 0; k < count; ++k) r = cantor_pair(b, r);
  return r;
}

Nat code_fund(const Nat& a, const Nat& x, const Limits& limits) {
  require_code(a, limits);
  if (a == 0) return 0;
  std::vector<Nat> comps = code_components(a);
  const Nat last = comps.back();
  if (last == 0) {
    // last repetition term is w^0: drop it
    comps.pop_back();
  } else {
    const std::vector<Nat> lcomps = code_components(last);
    if (lcomps.back() == 0) {
      // last exponent is a successor code: one copy becomes x copies of its
      // predecessor
      std::vector<Nat> pred(lcomps.begin(), lcomps.end() - 1);
      const Nat b = pack_components(pred);
      comps.pop_back();
      for (Nat k = 0; k < x; ++k) comps.push_back(b);
    } else {
      comps.back() = code_fund(last, x, limits);
    }
  }
  const Nat result = pack_components(comps);
  if (bit_length(result) > limits.max_nat_bits) {
    throw ResourceLimitError("code size exceeds bit cap");
  }
  return result;
}

Nat code_max_coefficient(const Nat& a, const Limits& limits) {
  return max_coefficient(decode(a, limits));
}

Nat code_add(const Nat& a, const Nat& b, const Limits& limits) {
  return encode(add(decode(a, limits), decode(b, limits)));
}

Nat code_natural_sum(const Nat& a, const Nat& b, const Limits& limits) {
  return encode(natural_sum(decode(a, limits), decode(b, limits)));
}

Nat code_multiply(const Nat& a, const Nat& b, const Limits& limits) {
  return encode(multiply(decode(a, limits), decode(b, limits)));
}

}  // namespace ord
