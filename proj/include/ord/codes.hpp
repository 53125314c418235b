#pragma once

#include <utility>
#include <vector>

#include "ord/limits.hpp"
#include "ord/nat.hpp"
#include "ord/ordinal.hpp"

namespace ord {

// Cantor pairing j(x,y) = (x+y+1)(x+y)/2 + y and its exact inverse.
Nat cantor_pair(const Nat& x, const Nat& y);
std::pair<Nat, Nat> cantor_unpair(const Nat& z);

// Projection of component i from an n-tuple payload built by nesting pairs,
// outermost slot last: payload(c_1..c_n) = j(c_n, j(c_{n-1}, ... j(c_2, c_1))).
// project(n, n, p) is the first projection of p; project(n, 1, p) peels n-1
// second projections. Satisfies the reassembly identity
//   j(project(n,n,p), j(project(n,n-1,p), ..., project(n,1,p)...)) == p.
// pre: 1 <= i <= n.
Nat project(const Nat& n, const Nat& i, const Nat& payload);

// Ordinal codes: 0 codes 0; otherwise a = j(n, payload) with n > 0 and the n
// extracted components themselves codes in non-increasing order. A code's
// components are the codes of the exponents of the repetition form
// w^{e_1} + ... + w^{e_n}, leading exponent innermost.
bool is_code(const Nat& a, const Limits& limits = default_limits());

// Strict order on codes mirroring the ordinal order. pre: both are codes.
bool code_less(const Nat& a, const Nat& b, const Limits& limits = default_limits());

// w_0 = j(1,0) = 1, w_{d+1} = j(1, w_d); the code of the height-d omega tower.
Nat w_code(const Nat& d);

// Structural order- and operation-preserving encoding; decode is its inverse.
Nat encode(const Ordinal& a);
Ordinal decode(const Nat& a, const Limits& limits = default_limits());

// Fundamental sequence directly on codes; commutes with decode for x >= 1.
Nat code_fund(const Nat& a, const Nat& x, const Limits& limits = default_limits());

// Component codes of a, leading (largest) exponent first. a must be a
// nonzero code.
std::vector<Nat> code_components(const Nat& a);

// Repeated prefix pairing used by the successor-exponent case of code_fund:
// stack(0, b, a) = j2(j2(a)), stack(i+1, b, a) = j(b, stack(i, b, a)).
// Exposed because its growth bound is part of the contract.
Nat code_fund_stack(const Nat& count, const Nat& b, const Nat& a);

// Arithmetic on codes, implemented by round-tripping through decode. The
// contract is commutation with the symbolic operations.
Nat code_max_coefficient(const Nat& a, const Limits& limits = default_limits());
Nat code_add(const Nat& a, const Nat& b, const Limits& limits = default_limits());
Nat code_natural_sum(const Nat& a, const Nat& b, const Limits& limits = default_limits());
Nat code_multiply(const Nat& a, const Nat& b, const Limits& limits = default_limits());

}  // namespace ord
