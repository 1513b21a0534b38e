#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "metab/canonical.hpp"
#include "metab/errors.hpp"
#include "testutil.hpp"

using namespace metab;

TEST_CASE("t1 grading") {
  TruncPoly t1 = TruncPoly::variable(2, 3, 0);
  TruncPoly t2 = TruncPoly::variable(2, 3, 1);
  TruncPoly f = t1 * t1 * t2 + t1 * t2 * 3 + t2 + TruncPoly::constant(2, 3, 5);
  T1Split s = t1_split(f);
  CHECK(s.p == t2);
  CHECK(s.q == t2 * 3);
  CHECK(s.r == t2 + TruncPoly::constant(2, 3, 5));
  CHECK(t1 * t1 * s.p.recapped(3) + t1 * s.q.recapped(3) + s.r.recapped(3) ==
        f);
}

TEST_CASE("identity is canonical") {
  for (int m : {2, 3, 4}) {
    AlgebraConfig cfg(m, 4);
    CHECK(shape_check(IAEndomorphism::identity(cfg)));
  }
}

TEST_CASE("reduction factors the input") {
  for (int m : {2, 3, 4}) {
    for (int c : {3, 4, 5}) {
      AlgebraConfig cfg(m, c);
      testutil::Rng rng(static_cast<unsigned>(m + 8 * c));
      for (int iter = 0; iter < 15; ++iter) {
        IAEndomorphism psi = testutil::rand_ia(cfg, rng);
        ReductionTrace tr = reduce(psi);
        CHECK(shape_check(tr.canonical.theta));
        CHECK(compose(exp_ad(tr.combined_inner).expansion,
                      tr.canonical.theta) == psi);
        CHECK(tr.canonical.jacobian == jacobian(tr.canonical.theta));
      }
    }
  }
}

TEST_CASE("reduction is idempotent") {
  AlgebraConfig cfg(3, 5);
  testutil::Rng rng(83);
  for (int iter = 0; iter < 15; ++iter) {
    ReductionTrace tr = reduce(testutil::rand_ia(cfg, rng));
    ReductionTrace tr2 = reduce(tr.canonical.theta);
    CHECK(tr2.combined_inner.is_zero());
    CHECK(tr2.canonical.theta == tr.canonical.theta);
  }
}

TEST_CASE("inner automorphisms reduce to the identity") {
  for (int m : {2, 3}) {
    for (int c : {3, 5}) {
      AlgebraConfig cfg(m, c);
      testutil::Rng rng(static_cast<unsigned>(4 * m + c));
      for (int iter = 0; iter < 15; ++iter) {
        LieElement u = testutil::rand_lie(cfg, rng);
        IAEndomorphism psi = exp_ad(u).expansion;
        auto v = is_inner(psi);
        REQUIRE(v.has_value());
        CHECK(exp_ad(*v).expansion == psi);
      }
    }
  }
}

TEST_CASE("a fixed non-inner representative") {
  AlgebraConfig cfg(2, 3);
  TruncPoly t1 = TruncPoly::variable(2, cfg.deriv_cap(), 0);
  TruncPoly t2 = TruncPoly::variable(2, cfg.deriv_cap(), 1);
  JacobianMatrix M = JacobianMatrix::identity(cfg);
  M.entry(0, 0) += t2 * t2;
  M.entry(1, 0) += -t1 * t2;
  IAEndomorphism theta = from_jacobian(M);
  CHECK(shape_check(theta));
  CHECK(!is_inner(theta).has_value());
  ReductionTrace tr = reduce(theta);
  CHECK(tr.combined_inner.is_zero());
  CHECK(tr.canonical.theta == theta);
}

TEST_CASE("coset relation") {
  for (int m : {2, 3}) {
    AlgebraConfig cfg(m, 4);
    testutil::Rng rng(static_cast<unsigned>(90 + m));
    for (int iter = 0; iter < 15; ++iter) {
      IAEndomorphism psi = testutil::rand_ia(cfg, rng);
      LieElement u = testutil::rand_lie(cfg, rng);
      IAEndomorphism inn = exp_ad(u).expansion;
      CHECK(same_coset(psi, compose(inn, psi)));
      // Inn is normal, so right translation stays in the coset
      CHECK(same_coset(psi, compose(psi, inn)));
      CHECK(same_coset(psi, psi));
    }
    // distinct canonical forms separate cosets
    IAEndomorphism psi1 = testutil::rand_ia(cfg, rng);
    ReductionTrace tr1 = reduce(psi1);
    TruncPoly t1 = TruncPoly::variable(m, cfg.deriv_cap(), 0);
    TruncPoly t2 = TruncPoly::variable(m, cfg.deriv_cap(), 1);
    JacobianMatrix M = tr1.canonical.jacobian;
    M.entry(0, 0) += t2 * t2;
    M.entry(1, 0) += -t1 * t2;
    IAEndomorphism psi2 = from_jacobian(M);
    if (reduce(psi2).canonical.theta != tr1.canonical.theta)
      CHECK(!same_coset(psi1, psi2));
  }
}
