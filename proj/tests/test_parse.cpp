#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "metab/errors.hpp"
#include "metab/parse.hpp"
#include "testutil.hpp"

using namespace metab;

TEST_CASE("atoms and terms") {
  AlgebraConfig cfg(3, 4);
  CHECK(parse_lie("y1", cfg) == LieElement::generator(cfg, 0));
  CHECK(parse_lie("  y3 ", cfg) == LieElement::generator(cfg, 2));
  CHECK(parse_lie("3/2*y1", cfg) ==
        LieElement::generator(cfg, 0) * (Rational(3) / 2));
  CHECK(parse_lie("0", cfg).is_zero());
  CHECK(parse_lie("0*y1", cfg).is_zero());
}

TEST_CASE("sums and signs") {
  AlgebraConfig cfg(2, 3);
  LieElement y1 = LieElement::generator(cfg, 0);
  LieElement y2 = LieElement::generator(cfg, 1);
  CHECK(parse_lie("y1 + y2", cfg) == y1 + y2);
  CHECK(parse_lie("y1 - y2", cfg) == y1 - y2);
  CHECK(parse_lie("-y1 + 2*y2", cfg) == -y1 + y2 * 2);
  CHECK(parse_lie("y1 + y1 + y1", cfg) == y1 * 3);
}

TEST_CASE("commutators") {
  AlgebraConfig cfg(3, 5);
  LieElement y1 = LieElement::generator(cfg, 0);
  LieElement y2 = LieElement::generator(cfg, 1);
  LieElement y3 = LieElement::generator(cfg, 2);
  CHECK(parse_lie("[y2,y1]", cfg) == bracket(y2, y1));
  // left-normed: [a,b,c] = [[a,b],c]
  CHECK(parse_lie("[y2,y1,y3]", cfg) == bracket(bracket(y2, y1), y3));
  CHECK(parse_lie("[y1 + y2, y1]", cfg) == bracket(y1 + y2, y1));
  CHECK(parse_lie("1/2*[y2,y1] - [y3,y1]", cfg) ==
        bracket(y2, y1) * (Rational(1) / 2) - bracket(y3, y1));
  CHECK(parse_lie("[[y2,y1],[y3,y1]]", cfg) ==
        bracket(bracket(y2, y1), bracket(y3, y1)));
}

TEST_CASE("round trip through the printer") {
  for (int m : {2, 3, 4}) {
    for (int c : {3, 4, 6}) {
      AlgebraConfig cfg(m, c);
      testutil::Rng rng(static_cast<unsigned>(m + 16 * c));
      for (int iter = 0; iter < 25; ++iter) {
        LieElement u = testutil::rand_lie(cfg, rng);
        CHECK(parse_lie(u.str(), cfg) == u);
      }
    }
  }
}

TEST_CASE("rejects malformed input") {
  AlgebraConfig cfg(2, 3);
  CHECK_THROWS_AS(parse_lie("", cfg), ParseError);
  CHECK_THROWS_AS(parse_lie("y1 +", cfg), ParseError);
  CHECK_THROWS_AS(parse_lie("y0", cfg), ParseError);
  CHECK_THROWS_AS(parse_lie("y3", cfg), ParseError);
  CHECK_THROWS_AS(parse_lie("[y1]", cfg), ParseError);
  CHECK_THROWS_AS(parse_lie("[y2,y1", cfg), ParseError);
  CHECK_THROWS_AS(parse_lie("1/0*y1", cfg), ParseError);
  CHECK_THROWS_AS(parse_lie("2 y1", cfg), ParseError);
  CHECK_THROWS_AS(parse_lie("y1 y2", cfg), ParseError);
  CHECK_THROWS_AS(parse_lie("x1", cfg), ParseError);
}

TEST_CASE("error positions are reported") {
  AlgebraConfig cfg(2, 3);
  try {
    parse_lie("y1 + z", cfg);
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.pos == 5);
  }
}
