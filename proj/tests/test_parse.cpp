#include <doctest.h>

#include "ord/enumerate.hpp"
#include "ord/errors.hpp"
#include "ord/parse.hpp"

using namespace ord;

TEST_CASE("grammar basics") {
  CHECK(parse_ordinal("w^2*3+w+4") == Ordinal::from_terms({{Ordinal::from_nat(2), 3},
                                                           {Ordinal::from_nat(1), 1},
                                                           {Ordinal{}, 4}}));
  CHECK(parse_ordinal("w+w^2") == parse_ordinal("w^2"));
  CHECK(parse_ordinal("w_2") == parse_ordinal("w^w"));
  CHECK(parse_ordinal("w_0") == parse_ordinal("1"));
  CHECK(parse_ordinal("w_3") == parse_ordinal("w^(w^w)"));
  CHECK(parse_ordinal("tower(2, w+1)") == parse_ordinal("w^(w^(w+1))"));
  CHECK(parse_ordinal("w*0") == Ordinal{});
  CHECK(parse_ordinal("") == Ordinal{});
  CHECK(parse_ordinal("   ") == Ordinal{});
  CHECK(parse_ordinal("w^0*7") == parse_ordinal("7"));
  CHECK(parse_ordinal("w_1*3") == parse_ordinal("w*3"));
  CHECK(parse_ordinal(" w ^ 2 * 3 + 1 ") == parse_ordinal("w^2*3+1"));
  CHECK(parse_ordinal("123456789012345678901234567890") ==
        Ordinal::from_nat(Nat("123456789012345678901234567890")));
}

TEST_CASE("absorption during parsing") {
  CHECK(parse_ordinal("w+w") == parse_ordinal("w*2"));
  CHECK(parse_ordinal("1+w") == parse_ordinal("w"));
  CHECK(parse_ordinal("w^2+w+w^2") == parse_ordinal("w^2*2"));
}

TEST_CASE("errors carry positions") {
  CHECK_THROWS_AS(parse_ordinal("w^"), ParseError);
  CHECK_THROWS_AS(parse_ordinal("w++1"), ParseError);
  CHECK_THROWS_AS(parse_ordinal("(w"), ParseError);
  CHECK_THROWS_AS(parse_ordinal("q"), ParseError);
  CHECK_THROWS_AS(parse_ordinal("w^2^3"), ParseError);
  CHECK_THROWS_AS(parse_ordinal("w_2^3"), ParseError);  // towers take no exponent
  CHECK_THROWS_AS(parse_ordinal("tower(2 w)"), ParseError);
  try {
    parse_ordinal("w*");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
    CHECK(e.expected() == "numeral");
  }
}

TEST_CASE("parse inverts render over the full enumeration") {
  for (const Ordinal& a : enumerate_ordinals(2, 3, 2)) {
    CAPTURE(render(a));
    REQUIRE(parse_ordinal(render(a)) == a);
  }
}
