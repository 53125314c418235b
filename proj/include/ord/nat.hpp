#pragma once

#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

namespace ord {

// Arbitrary-precision natural number. All library values are non-negative.
using Nat = boost::multiprecision::cpp_int;

// Number of bits of n; 0 for n == 0.
std::size_t bit_length(const Nat& n);

bool is_power_of_two(const Nat& n);

// Decides base^exponent >= threshold exactly, without materializing the power
// when it is large: partial products of square-and-multiply all divide the
// final value, so the computation can stop as soon as one reaches threshold.
bool pow_at_least(const Nat& base, const Nat& exponent, const Nat& threshold);

}  // namespace ord
