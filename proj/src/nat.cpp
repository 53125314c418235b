#include "ord/nat.hpp"

#include "ord/limits.hpp"

namespace ord {

const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

std::size_t bit_length(const Nat& n) {
  if (n == 0) return 0;
  return static_cast<std::size_t>(boost::multiprecision::msb(n)) + 1;
}

bool is_power_of_two(const Nat& n) {
  return n > 0 && (n & (n - 1)) == 0;
}

bool pow_at_least(const Nat& base, const Nat& exponent, const Nat& threshold) {
  if (threshold <= 1) return true;
  if (base == 0) return false;
  if (base == 1) return false;  // threshold >= 2 here
  if (exponent == 0) return false;

  Nat result = 1;
  Nat b = base;
  Nat e = exponent;
  while (true) {
    if ((e & 1) != 0) {
      result *= b;
      if (result >= threshold) return true;
    }
    e >>= 1;
    if (e == 0) return false;  // result now holds base^exponent exactly
    // Once the square reaches the threshold, some future set bit of e (its
    // leading bit at the latest) multiplies result by a factor >= b.
    b *= b;
    if (b >= threshold) return true;
  }
}

}  // namespace ord
