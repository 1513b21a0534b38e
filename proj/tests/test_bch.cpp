#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "metab/autgroup.hpp"
#include "metab/bch.hpp"
#include "testutil.hpp"

using namespace metab;

TEST_CASE("series coefficients through degree two") {
  BchSeries s = gerritzen_c(2);
  CHECK(s.series.coeff(Monomial::one(2)) == Rational(1) / 2);
  CHECK(s.series.coeff(Monomial::var(2, 0)) == Rational(-1) / 12);
  CHECK(s.series.coeff(Monomial::var(2, 1)) == Rational(1) / 12);
  CHECK(s.series.coeff(Monomial::var(2, 0).times_var(1)) ==
        Rational(-1) / 24);
  CHECK(s.series.coeff(Monomial::var(2, 0).times_var(0)) == 0);
  CHECK(s.series.coeff(Monomial::var(2, 1).times_var(1)) == 0);
}

TEST_CASE("series satisfies its defining equation") {
  for (int cap : {1, 2, 3, 4, 5}) {
    BchSeries s = gerritzen_c(cap);
    CHECK(s.cap == cap);
    TruncPoly t = TruncPoly::variable(2, cap, 0);
    TruncPoly u = TruncPoly::variable(2, cap, 1);
    // c(t,u) (e^{t+u} - 1) = e^u h(t) - h(u), all truncated alike
    TruncPoly lhs = s.series * (exp_trunc(t + u) -
                                TruncPoly::constant(2, cap, 1));
    TruncPoly rhs = exp_trunc(u) * h_trunc(t) - h_trunc(u);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("composition formula basics") {
  AlgebraConfig cfg(3, 4);
  testutil::Rng rng(19);
  for (int iter = 0; iter < 20; ++iter) {
    LieElement u = testutil::rand_lie(cfg, rng);
    CHECK(bch_compose(u, LieElement(cfg)) == u);
    CHECK(bch_compose(LieElement(cfg), u) == u);
    CHECK(bch_compose(u, -u).is_zero());
  }
}

TEST_CASE("solves the inner composition equation") {
  for (int m : {2, 3, 4}) {
    for (int c : {3, 4, 6}) {
      AlgebraConfig cfg(m, c);
      testutil::Rng rng(static_cast<unsigned>(m + 100 * c));
      for (int iter = 0; iter < 15; ++iter) {
        LieElement u = testutil::rand_lie(cfg, rng);
        LieElement v = testutil::rand_lie(cfg, rng);
        LieElement w = bch_compose(u, v);
        CHECK(exp_ad(w).expansion ==
              compose(exp_ad(u).expansion, exp_ad(v).expansion));
      }
    }
  }
}

TEST_CASE("associativity of the induced product") {
  AlgebraConfig cfg(2, 5);
  testutil::Rng rng(23);
  for (int iter = 0; iter < 15; ++iter) {
    LieElement u = testutil::rand_lie(cfg, rng);
    LieElement v = testutil::rand_lie(cfg, rng);
    LieElement w = testutil::rand_lie(cfg, rng);
    CHECK(bch_compose(bch_compose(u, v), w) ==
          bch_compose(u, bch_compose(v, w)));
  }
}

TEST_CASE("degree-two truncation of the product") {
  // at class 2 the product is u + v + 1/2 [v,u]
  AlgebraConfig cfg(3, 2);
  testutil::Rng rng(29);
  for (int iter = 0; iter < 20; ++iter) {
    LieElement u = testutil::rand_lie(cfg, rng);
    LieElement v = testutil::rand_lie(cfg, rng);
    CHECK(bch_compose(u, v) ==
          u + v + bracket(v, u) * (Rational(1) / 2));
  }
}
