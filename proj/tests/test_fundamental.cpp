#include <doctest.h>

#include <random>

#include "ord/enumerate.hpp"
#include "ord/errors.hpp"
#include "ord/fundamental.hpp"
#include "ord/parse.hpp"
#include "ord/serialize.hpp"
#include "oracles.hpp"

using namespace ord;

namespace {

Ordinal O(const char* text) { return parse_ordinal(text); }

FiniteSet set_of(std::initializer_list<int> xs) {
  std::vector<Nat> v;
  for (int x : xs) v.emplace_back(x);
  return FiniteSet(std::move(v));
}

}  // namespace

TEST_CASE("fundamental sequence basics") {
  CHECK(fund(O("w"), 3) == O("3"));
  CHECK(fund(O("w+1"), 5) == O("w"));
  CHECK(fund(O("w^w"), 3) == O("w^3"));
  CHECK(fund(O("w^2+w"), 4) == O("w^2+4"));
  CHECK(fund(O("0"), 9) == O("0"));
  CHECK(fund(O("w^2*3"), 2) == O("w^2*2+w*2"));
  CHECK(fund(O("w^(w*2)"), 3) == O("w^(w+3)"));
  CHECK(fund(O("w^(w+1)"), 2) == O("w^w*2"));
}

TEST_CASE("fund at zero drops the vanished term") {
  CHECK(fund(O("w"), 0) == O("0"));
  CHECK(fund(O("w^2+w"), 0) == O("w^2"));
  CHECK(fund(O("w^w"), 0) == O("1"));  // limit exponent: w^(w[0]) = w^0
  CHECK(fund(O("5"), 0) == O("4"));
}

TEST_CASE("fund agrees with the dense-vector oracle below w^w") {
  for (const Ordinal& a : enumerate_ordinals(1, 3, 3)) {
    for (int x = 0; x <= 6; ++x) {
      CAPTURE(render(a));
      CHECK(oracle::from_vec(oracle::vec_fund(oracle::to_vec(a), x)) == fund(a, x));
    }
  }
}

TEST_CASE("iteration traces") {
  const DescentTrace t1 = fund_iter(O("w"), set_of({1, 2}));
  REQUIRE(t1.states.size() == 3);
  CHECK(t1.states[0] == O("w"));
  CHECK(t1.states[1] == O("1"));
  CHECK(t1.states[2] == O("0"));
  CHECK(t1.reaches_zero());

  CHECK(fund_iter(O("w"), set_of({3, 4, 5, 6})).terminal() == O("0"));
  const DescentTrace t0 = fund_iter(O("0"), set_of({4, 9, 12}));
  for (const Ordinal& s : t0.states) CHECK(s.is_zero());
}

TEST_CASE("largeness") {
  CHECK(is_large(O("w"), set_of({1, 2})));
  CHECK_FALSE(is_large(O("w"), set_of({3, 4, 5})));
  CHECK(is_large(O("w*2"), FiniteSet::interval(3, 14)));
  CHECK_FALSE(is_large(O("w*2"), FiniteSet::interval(3, 13)));
  CHECK(is_large(O("0"), set_of({})));
  CHECK(is_large(O("0"), set_of({7})));
}

TEST_CASE("minimal large endpoints") {
  CHECK(minimal_large_endpoint(O("w"), 4, 100) == Nat(8));
  CHECK(minimal_large_endpoint(O("1"), 5, 100) == Nat(5));
  CHECK(minimal_large_endpoint(O("0"), 9, 100) == Nat(9));
  CHECK(minimal_large_endpoint(O("w"), 50, 60) == std::nullopt);
  CHECK_THROWS_AS(minimal_large_endpoint(O("w"), 0, 10), PreconditionError);

  // smallest w-large interval from x is [x, 2x]
  for (int x = 1; x <= 12; ++x) {
    CHECK(minimal_large_endpoint(Ordinal::omega(), x, 1000) == Nat(2 * x));
  }

  // w^2 needs more than [x, 2^x * x]
  const auto n3 = minimal_large_endpoint(O("w^2"), 3, 1000000);
  REQUIRE(n3.has_value());
  CHECK(*n3 > 24);

  // independent scan: first N with [x, N] large, by direct per-N iteration
  const Nat expect = *minimal_large_endpoint(O("w^2"), 3, 100000);
  for (Nat n = 3; n < expect; ++n) {
    CHECK_FALSE(is_large(O("w^2"), FiniteSet::interval(3, n)));
  }
  CHECK(is_large(O("w^2"), FiniteSet::interval(3, expect)));
}

TEST_CASE("thrice iterated exponential") {
  CHECK(exp3(0) == 4);
  CHECK(exp3(1) == 16);
  CHECK(exp3(2) == 65536);
  const Nat e3 = exp3(3);
  CHECK(e3 == Nat(1) << 256);
  CHECK(e3.str().size() == 78);
  CHECK(bit_length(exp3(4)) == 65537);
  CHECK_THROWS_AS(exp3(5), ResourceLimitError);
  CHECK_THROWS_AS(exp3(100), ResourceLimitError);
}

TEST_CASE("exact comparison against exp3 without materializing") {
  CHECK(le_exp3(0, 0));
  CHECK(le_exp3(4, 0));
  CHECK_FALSE(le_exp3(5, 0));
  CHECK(le_exp3(65536, 2));
  CHECK_FALSE(le_exp3(65537, 2));
  CHECK(le_exp3(65535, 2));
  CHECK(le_exp3(exp3(3), 3));
  CHECK_FALSE(le_exp3(exp3(3) + 1, 3));
  CHECK(le_exp3(exp3(3) - 1, 3));
  // x = 5, 6: the power has 2^32 / 2^64 bits; comparisons stay exact
  CHECK(le_exp3(exp3(4), 5));
  CHECK(le_exp3((Nat(1) << 100000) + 12345, 5));
  CHECK(le_exp3((Nat(1) << 100000) + 12345, 6));
  CHECK(le_exp3(exp3(4), 100));
}

TEST_CASE("descent threshold") {
  CHECK(descent_threshold(O("0"), 0) == O("w^3+2"));
  CHECK(descent_threshold(O("w"), 1) == O("w^4+w^3+3"));
  CHECK(descent_threshold(O("1"), 2) == O("w^3*2+4"));
}

TEST_CASE("bound lemma instance reports") {
  SUBCASE("premise failure: set too small to be threshold-large") {
    const auto r = verify411(FiniteSet::interval(3, 10), 0,
                             {O("5"), O("4"), O("3")}, 1000);
    CHECK(r.phi_large == Largeness::No);
    CHECK(r.strictly_decreasing);
    CHECK(r.mc_bounds_hold);
    CHECK(r.conclusion_holds);  // 2 <= 7
    CHECK(r.claim_status == Verify411Report::ClaimStatus::SkippedPremise);
    CHECK_FALSE(r.premises_hold());
  }
  SUBCASE("non-decreasing gammas are reported") {
    const auto r = verify411(FiniteSet::interval(3, 10), 0, {O("3"), O("4")}, 1000);
    CHECK_FALSE(r.strictly_decreasing);
  }
  SUBCASE("iteration cap yields unknown") {
    const auto r = verify411(FiniteSet::interval(3, 30), 0, {O("1"), O("0")}, 5);
    CHECK(r.phi_large == Largeness::Unknown);
  }
  SUBCASE("mc bound failure") {
    const Ordinal big = Ordinal::from_nat(exp3(3) + 1);
    const auto r = verify411(FiniteSet::interval(3, 10), 0, {big, O("0")}, 1000);
    CHECK_FALSE(r.mc_bounds_hold);
  }
  SUBCASE("gammas outnumbering the set fail the index premise") {
    std::vector<Ordinal> gammas;
    for (int k = 9; k >= 0; --k) gammas.push_back(Ordinal::from_nat(k));
    const auto r = verify411(set_of({3, 4, 5}), 0, gammas, 1000);
    CHECK_FALSE(r.mc_bounds_hold);
    CHECK_FALSE(r.conclusion_holds);
  }
  SUBCASE("witness indices materialize when the elements are tiny") {
    const auto r = verify411(set_of({3, 4, 5, 6}), 0, {O("1")}, 1000);
    REQUIRE(r.witness_indices.has_value());
    CHECK(r.witness_indices->size() == 1);
    CHECK((*r.witness_indices)[0] == 0);
  }
  SUBCASE("witness values above the bit cap are flagged, not computed") {
    const auto r = verify411(FiniteSet::interval(3, 30), 0, {O("1"), O("0")}, 1000);
    CHECK_FALSE(r.witness_indices.has_value());  // exp3(5) exceeds the cap
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(verify411(set_of({2, 5}), 0, {O("1")}, 10), PreconditionError);
    CHECK_THROWS_AS(verify411(set_of({3, 5}), 0, {}, 10), PreconditionError);
  }
}

TEST_CASE("fundamental bound: a[x] >= b for x > MC(b)") {
  const auto values = enumerate_ordinals(1, 2, 3);
  for (const Ordinal& a : values) {
    for (const Ordinal& b : values) {
      if (compare(a, b) != std::strong_ordering::greater) continue;
      const Nat mc = max_coefficient(b);
      for (Nat x = mc + 1; x <= mc + 4; ++x) {
        const Ordinal ax = fund(a, x);
        const auto c = compare(ax, b);
        CHECK(c != std::strong_ordering::less);
        if (classify(a) == OrdinalKind::Limit) {
          CHECK(c == std::strong_ordering::greater);
        }
      }
    }
  }
}

TEST_CASE("shift largeness: bigger inputs keep traces positive") {
  const auto values = enumerate_ordinals(2, 2, 2);
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 3000; ++iter) {
    const Ordinal& a = values[rng() % values.size()];
    const std::size_t len = 1 + rng() % 21;  // R <= 20
    std::vector<Nat> xs, ys;
    Nat x = 1 + rng() % 3;
    const Nat mc = max_coefficient(a);
    Nat y = mc + 1 + rng() % 3;
    if (y < x) y = x;
    for (std::size_t i = 0; i < len; ++i) {
      xs.push_back(x);
      ys.push_back(y);
      const Nat dx = 1 + rng() % 3;
      Nat dy = 1 + rng() % 3;
      if (y + dy < x + dx) dy = x + dx - y;  // keep x_i <= y_i
      x += dx;
      y += dy;
    }
    const FiniteSet X(std::move(xs)), Y(std::move(ys));
    if (!fund_iter(a, X).terminal().is_zero()) {
      CAPTURE(render(a));
      CAPTURE(X.to_string());
      CAPTURE(Y.to_string());
      CHECK_FALSE(fund_iter(a, Y).terminal().is_zero());
    }
  }
}

TEST_CASE("larger ordinals dominate pointwise while the smaller trace lives") {
  const auto values = enumerate_ordinals(2, 2, 2);
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 3000; ++iter) {
    const Ordinal& a = values[rng() % values.size()];
    const Ordinal& b = values[rng() % values.size()];
    if (b.is_zero() || compare(a, b) != std::strong_ordering::greater) continue;
    const std::size_t len = 1 + rng() % 21;
    std::vector<Nat> xs;
    Nat x = max_coefficient(b) + 1 + rng() % 3;
    for (std::size_t i = 0; i < len; ++i) {
      xs.push_back(x);
      x += 1 + rng() % 3;
    }
    const FiniteSet X(std::move(xs));
    const DescentTrace ta = fund_iter(a, X), tb = fund_iter(b, X);
    for (std::size_t i = 0; i < ta.states.size(); ++i) {
      const auto c = compare(ta.states[i], tb.states[i]);
      CHECK(c != std::strong_ordering::less);
      if (!tb.states[i].is_zero()) {
        CAPTURE(render(a));
        CAPTURE(render(b));
        CAPTURE(X.to_string());
        CHECK(c == std::strong_ordering::greater);
      }
    }
  }
}

TEST_CASE("descent interpolation: sandwiched values appear on the trace") {
  const auto values = enumerate_ordinals(2, 2, 2);
  const auto betas = enumerate_ordinals(1, 2, 2);
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 400; ++iter) {
    const Ordinal& a = values[rng() % values.size()];
    std::vector<Nat> xs;
    Nat x = 1 + rng() % 4;
    for (std::size_t i = 0; i < 12; ++i) {
      xs.push_back(x);
      x += 1 + rng() % 3;
    }
    const FiniteSet X(std::move(xs));
    const DescentTrace t = fund_iter(a, X);
    for (const Ordinal& b : betas) {
      const Nat mc = max_coefficient(b);
      for (std::size_t p = 0; p < X.size(); ++p) {
        if (!(X[p] > mc)) continue;
        if (compare(t.states[p], b) != std::strong_ordering::greater) continue;
        for (std::size_t j = p + 1; j < t.states.size(); ++j) {
          if (compare(b, t.states[j]) == std::strong_ordering::less) continue;
          bool found = false;
          for (std::size_t l = p + 1; l <= j; ++l) {
            if (t.states[l] == b) {
              found = true;
              break;
            }
          }
          CHECK(found);
          break;  // larger j only weakens the sandwich; one witness suffices
        }
      }
    }
  }
}

TEST_CASE("w-large sets outgrow their minimum") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 2000; ++iter) {
    std::vector<Nat> xs;
    Nat x = 1 + rng() % 6;
    const std::size_t len = 1 + rng() % 12;
    for (std::size_t i = 0; i < len; ++i) {
      xs.push_back(x);
      x += 1 + rng() % 3;
    }
    const FiniteSet X(std::move(xs));
    if (is_large(Ordinal::omega(), X)) {
      CHECK(Nat(X.size()) > X.min());
    }
  }
}

TEST_CASE("coefficient growth notices") {
  const Ordinal w3 = O("w^3");
  for (const Ordinal& a : enumerate_ordinals(1, 3, 3)) {
    const Nat mca = max_coefficient(a);
    for (int x = 0; x <= 6; ++x) {
      const Nat lhs = max_coefficient(add(multiply(w3, a), Ordinal::from_nat(x)));
      const Nat bound = std::max(Nat(mca + 3), Nat(x));
      CHECK(lhs <= bound);
      CHECK(max_coefficient(fund(a, x)) <= std::max(mca, Nat(x)));
    }
  }
}

TEST_CASE("exp3 outruns itself by more than 4") {
  // Direct comparison where both sides materialize.
  for (int x = 0; x <= 3; ++x) {
    CHECK(exp3(x + 1) > exp3(x) + 4);
  }
  // For x up to 6 the exponents 2^(2^x) are exact and strictly increasing;
  // since exp3(x) >= 16 there, adding 4 never adds a bit, so the strictly
  // longer number is strictly bigger.
  for (unsigned x = 1; x <= 6; ++x) {
    const Nat ex = Nat(1) << static_cast<unsigned>(1u << x);
    const Nat ex1 = Nat(1) << static_cast<unsigned>(1u << (x + 1));
    CHECK(ex1 > ex);
  }
}

TEST_CASE("w^3 stays positive along a long initial run") {
  Ordinal state = O("w^3");
  Nat x = 3;
  for (int step = 0; step < 20000; ++step) {
    state = fund(state, x);
    ++x;
    REQUIRE_FALSE(state.is_zero());
  }
}

TEST_CASE("largeness bridging instances") {
  std::mt19937_64 rng(23);
  for (unsigned c = 0; c <= 3; ++c) {
    const Ordinal big = Ordinal::power(Ordinal::from_nat(c + 4));
    const Ordinal target = add(
        add(Ordinal::power(Ordinal::from_nat(c + 3)), O("w^3")),
        Ordinal::from_nat(c + 4));
    for (int iter = 0; iter < 50; ++iter) {
      Ordinal state = big;
      Nat x = 3 + rng() % 4;
      for (unsigned i = 0; i <= c + 4; ++i) {
        state = fund(state, x);
        x += 1 + rng() % 3;
      }
      CHECK(compare(state, target) == std::strong_ordering::greater);
    }
  }
}

TEST_CASE("trace serialization formats") {
  const DescentTrace t = fund_iter(O("w^2"), set_of({2, 3}));
  CHECK(trace_to_text(t) == "0\t2\tw^2\n1\t3\tw*2\n2\t-\tw+3\n");
  const auto j = trace_to_json(t);
  CHECK(j["format_version"] == 1);
  CHECK(j["terminal"] == "w+3");
  CHECK(j["steps"].size() == 3);
  CHECK(j["steps"][1]["x"] == "3");
  CHECK(j["reaches_zero"] == false);
}

TEST_CASE("resource caps surface as resource errors") {
  Limits tight;
  tight.max_ordinal_terms = 2;
  CHECK_THROWS_AS(fund_iter(O("w^3"), FiniteSet::interval(3, 9), tight),
                  ResourceLimitError);
}
