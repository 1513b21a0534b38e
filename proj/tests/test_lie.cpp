#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "metab/errors.hpp"
#include "metab/lie.hpp"
#include "testutil.hpp"

using namespace metab;

namespace {

LieElement quad1(const AlgebraConfig &cfg, int p, int q) {
  LieElement u(cfg);
  u.add_quad_term(p, q, Monomial::one(cfg.rank), 1);
  return u;
}

} // namespace

TEST_CASE("addition and normal form") {
  AlgebraConfig cfg(3, 4);
  LieElement y1 = LieElement::generator(cfg, 0);
  LieElement y2 = LieElement::generator(cfg, 1);
  LieElement sum = y1 + y2;
  CHECK(sum.linear() == std::vector<Rational>{1, 1, 0});
  CHECK(sum.quad().empty());

  testutil::Rng rng(3);
  LieElement u = testutil::rand_lie(cfg, rng);
  CHECK((u + u * Rational(-1)).is_zero());

  // [y2,y1] + [y2,y1] ad y1 shares the head pair
  LieElement a = quad1(cfg, 1, 0);
  LieElement b = apply_ad_poly(quad1(cfg, 1, 0),
                               TruncPoly::variable(3, cfg.quad_cap(), 0));
  LieElement c = a + b;
  CHECK(c.quad_poly(1, 0) ==
        TruncPoly::constant(3, cfg.quad_cap(), 1) +
            TruncPoly::variable(3, cfg.quad_cap(), 0));
}

TEST_CASE("straightening") {
  AlgebraConfig cfg(3, 4);
  // [y2,y1] ad y1 -> (2,1): t1
  LieElement a = straighten(cfg, 1, 0, 0);
  CHECK(a.quad_poly(1, 0) == TruncPoly::variable(3, cfg.quad_cap(), 0));

  // [y3,y2] ad y1 -> (3,1): t2, (2,1): -t3
  LieElement b = straighten(cfg, 2, 1, 0);
  CHECK(b.quad_poly(2, 0) == TruncPoly::variable(3, cfg.quad_cap(), 1));
  CHECK(b.quad_poly(1, 0) == -TruncPoly::variable(3, cfg.quad_cap(), 2));

  // [y3,y1] ad y2 -> (3,1): t2
  LieElement c = straighten(cfg, 2, 0, 1);
  CHECK(c.quad_poly(2, 0) == TruncPoly::variable(3, cfg.quad_cap(), 1));

  // agrees with the bracket
  testutil::Rng rng(5);
  for (int p = 1; p < 3; ++p)
    for (int q = 0; q < p; ++q)
      for (int j = 0; j < 3; ++j)
        CHECK(straighten(cfg, p, q, j) ==
              bracket(quad1(cfg, p, q), LieElement::generator(cfg, j)));
}

TEST_CASE("bracket basics") {
  AlgebraConfig cfg(3, 4);
  LieElement y1 = LieElement::generator(cfg, 0);
  LieElement y2 = LieElement::generator(cfg, 1);
  CHECK(bracket(y2, y1) == quad1(cfg, 1, 0));
  CHECK(bracket(y1, y2) == -quad1(cfg, 1, 0));
  CHECK(bracket(quad1(cfg, 1, 0), quad1(cfg, 2, 0)).is_zero());
}

TEST_CASE("bracket worked example m=2 c=3") {
  AlgebraConfig cfg(2, 3);
  LieElement u = LieElement::generator(cfg, 1) + quad1(cfg, 1, 0);
  LieElement v = LieElement::generator(cfg, 0) + quad1(cfg, 1, 0);
  LieElement w = bracket(u, v);
  TruncPoly expect = TruncPoly::constant(2, 1, 1) +
                     TruncPoly::variable(2, 1, 0) -
                     TruncPoly::variable(2, 1, 1);
  CHECK(w.linear() == std::vector<Rational>{0, 0});
  CHECK(w.quad_poly(1, 0) == expect);
}

TEST_CASE("apply_ad_poly") {
  AlgebraConfig cfg(3, 4);
  LieElement c21 = quad1(cfg, 1, 0);
  CHECK(apply_ad_poly(c21, TruncPoly::variable(3, cfg.quad_cap(), 0)) ==
        straighten(cfg, 1, 0, 0));
  CHECK(apply_ad_poly(quad1(cfg, 2, 1),
                      TruncPoly::variable(3, cfg.quad_cap(), 0)) ==
        straighten(cfg, 2, 1, 0));
  testutil::Rng rng(9);
  LieElement u = testutil::rand_commutator(cfg, rng);
  CHECK(apply_ad_poly(u, TruncPoly::constant(3, cfg.quad_cap(), 1)) == u);
  CHECK_THROWS_AS(
      apply_ad_poly(LieElement::generator(cfg, 0),
                    TruncPoly::constant(3, cfg.quad_cap(), 1)),
      DomainError);
}

TEST_CASE("Lie algebra laws on random elements") {
  for (int m : {2, 3}) {
    for (int c : {3, 5}) {
      AlgebraConfig cfg(m, c);
      testutil::Rng rng(static_cast<unsigned>(100 * m + c));
      for (int iter = 0; iter < 40; ++iter) {
        LieElement u = testutil::rand_lie(cfg, rng);
        LieElement v = testutil::rand_lie(cfg, rng);
        LieElement w = testutil::rand_lie(cfg, rng);
        Rational alpha = testutil::rand_rational(rng);
        CHECK(bracket(u * alpha + v, w) ==
              bracket(u, w) * alpha + bracket(v, w));
        CHECK(bracket(u, u).is_zero());
        CHECK((bracket(bracket(u, v), w) + bracket(bracket(v, w), u) +
               bracket(bracket(w, u), v))
                  .is_zero());
        CHECK(bracket(u.quad_part(), v.quad_part()).is_zero());
      }
    }
  }
}

TEST_CASE("nilpotency at class boundary") {
  for (int c : {3, 4, 5}) {
    AlgebraConfig cfg(2, c);
    testutil::Rng rng(static_cast<unsigned>(c));
    // length c+1 always vanishes
    for (int iter = 0; iter < 20; ++iter) {
      std::uniform_int_distribution<int> gen(0, 1);
      LieElement w = LieElement::generator(cfg, gen(rng));
      LieElement prev = w;
      for (int k = 1; k <= c; ++k) {
        prev = w;
        w = bracket(w, LieElement::generator(cfg, gen(rng)));
      }
      CHECK(w.is_zero());
    }
    // a specific length-c bracket survives
    LieElement w = bracket(LieElement::generator(cfg, 1),
                           LieElement::generator(cfg, 0));
    for (int k = 2; k < c; ++k)
      w = bracket(w, LieElement::generator(cfg, 0));
    CHECK(!w.is_zero());
  }
}

TEST_CASE("projection to a smaller class") {
  AlgebraConfig cfg(3, 5);
  testutil::Rng rng(21);
  LieElement u = testutil::rand_lie(cfg, rng);
  LieElement p = project_to_class(u, 3);
  CHECK(p.config().nil_class == 3);
  CHECK(p.linear() == u.linear());
}

TEST_CASE("rendering") {
  AlgebraConfig cfg(2, 4);
  LieElement u = LieElement::generator(cfg, 0) +
                 quad1(cfg, 1, 0) * (Rational(-1) / 2);
  CHECK(u.str() == "y1 - 1/2*[y2,y1]");
  CHECK(LieElement(cfg).str() == "0");
  LieElement v = apply_ad_poly(quad1(cfg, 1, 0),
                               TruncPoly::variable(2, cfg.quad_cap(), 0) *
                                   TruncPoly::variable(2, cfg.quad_cap(), 1));
  CHECK(v.str() == "[y2,y1,y1,y2]");
}
