#include "metab/canonical.hpp"

#include "metab/bch.hpp"
#include "metab/errors.hpp"

namespace metab {

T1Split t1_split(const TruncPoly &f) {
  T1Split s{TruncPoly(f.num_vars(), f.cap()), TruncPoly(f.num_vars(), f.cap()),
            TruncPoly(f.num_vars(), f.cap())};
  for (const auto &[m, c] : f.terms()) {
    int e = m.exponent(0);
    if (e >= 2)
      s.p.add_term(m.div_var(0).div_var(0), c);
    else if (e == 1)
      s.q.add_term(m.div_var(0), c);
    else
      s.r.add_term(m, c);
  }
  return s;
}

namespace {

// Column-1 data of J(phi) - I in the split form of the canonical shape.
struct FirstColumn {
  TruncPoly s;
  std::vector<T1Split> rows; // index 1..m-1 used
};

FirstColumn first_column(const JacobianMatrix &J) {
  const AlgebraConfig &cfg = J.config();
  FirstColumn fc{J.entry(0, 0), {}};
  fc.s.add_term(Monomial::one(cfg.rank), -1);
  fc.rows.resize(static_cast<std::size_t>(cfg.rank),
                 t1_split(TruncPoly(cfg.rank, cfg.deriv_cap())));
  for (int i = 1; i < cfg.rank; ++i)
    fc.rows[static_cast<std::size_t>(i)] = t1_split(J.entry(i, 0));
  return fc;
}

} // namespace

bool shape_check(const IAEndomorphism &phi) {
  const AlgebraConfig &cfg = phi.config();
  JacobianMatrix J = jacobian(phi);
  FirstColumn fc = first_column(J);

  if (fc.s.depends_on(0))
    return false;
  for (int i = 1; i < cfg.rank; ++i) {
    const T1Split &row = fc.rows[static_cast<std::size_t>(i)];
    if (!row.p.is_zero())
      return false;
    if (row.q.constant_term() != 0)
      return false;
    for (int j = 1; j < i; ++j)
      if (row.q.depends_on(j))
        return false;
  }

  // Congruences at cap c.
  const int cc = cfg.nil_class;
  TruncPoly sum_q = fc.s.recapped(cc);
  TruncPoly sum_r(cfg.rank, cc);
  for (int i = 1; i < cfg.rank; ++i) {
    TruncPoly ti = TruncPoly::variable(cfg.rank, cc, i);
    sum_q += ti * fc.rows[static_cast<std::size_t>(i)].q.recapped(cc);
    sum_r += ti * fc.rows[static_cast<std::size_t>(i)].r.recapped(cc);
  }
  if (!sum_q.is_zero() || !sum_r.is_zero())
    return false;

  for (int j = 1; j < cfg.rank; ++j) {
    std::vector<TruncPoly> col = J.column(j);
    col[static_cast<std::size_t>(j)].add_term(Monomial::one(cfg.rank), -1);
    if (!membership(cfg, col))
      return false;
  }

  // Entry (1,2) may not contain a bare t_2 summand.
  return J.entry(0, 1).coeff(Monomial::var(cfg.rank, 1)) == 0;
}

ReductionTrace reduce(const IAEndomorphism &psi) {
  const AlgebraConfig &cfg = psi.config();
  const int m = cfg.rank;
  std::vector<LieElement> gens;
  gens.reserve(static_cast<std::size_t>(m));
  IAEndomorphism cur = psi;

  // phi_0 = exp(ad u_0), u_0 linear: c_1 kills the t_2 summand of the
  // (1,2) entry, c_k the t_1-linear terms of column 1.
  std::vector<Rational> c(static_cast<std::size_t>(m), Rational(0));
  c[0] = -psi.delta(1).quad_poly(1, 0).constant_term();
  for (int k = 1; k < m; ++k)
    c[static_cast<std::size_t>(k)] =
        psi.delta(0).quad_poly(k, 0).constant_term();
  LieElement u0 = LieElement::from_linear(cfg, std::move(c));
  cur = compose(exp_ad(u0).expansion, cur);
  gens.push_back(u0);

  // phi_1 = exp(ad u_1) removes the t_1^2-divisible part of column 1.
  JacobianMatrix J = jacobian(cur);
  LieElement u1(cfg);
  for (int i = 1; i < m; ++i) {
    T1Split split = t1_split(J.entry(i, 0));
    for (const auto &[mono, coeff] : split.p.terms())
      u1.add_quad_term(i, 0, mono, coeff);
  }
  cur = compose(exp_ad(u1).expansion, cur);
  gens.push_back(u1);
  J = jacobian(cur);
  for (int i = 1; i < m; ++i)
    if (!t1_split(J.entry(i, 0)).p.is_zero())
      throw InternalError("reduce: t1^2 component survived phi_1");

  // phi_s strips the t_s dependence of the q-parts below row s.
  for (int s = 1; s <= m - 2; ++s) {
    LieElement us(cfg);
    for (int i = s + 1; i < m; ++i) {
      TruncPoly q = t1_split(J.entry(i, 0)).q;
      for (const auto &[mono, coeff] : q.terms()) {
        if (mono.exponent(s) == 0)
          continue;
        Monomial quot = mono.div_var(s);
        for (int j = 0; j < s; ++j)
          if (quot.exponent(j) > 0)
            throw InternalError("reduce: q-part depends on an already "
                                "stripped variable");
        us.add_quad_term(i, s, quot, coeff);
      }
    }
    cur = compose(exp_ad(us).expansion, cur);
    gens.push_back(us);
    J = jacobian(cur);
    for (int i = s + 1; i < m; ++i)
      if (t1_split(J.entry(i, 0)).q.depends_on(s))
        throw InternalError("reduce: t_s dependence survived phi_s");
  }

  if (!shape_check(cur))
    throw InternalError("reduce: result fails the canonical shape conditions");

  // psi = exp(ad(-u_0)) ... exp(ad(-u_{m-1})) theta, folded into a single
  // generator by the BCH rule.
  LieElement v = -gens[0];
  for (std::size_t k = 1; k < gens.size(); ++k)
    v = bch_compose(v, -gens[k]);
  if (compose(exp_ad(v).expansion, cur) != psi)
    throw InternalError("reduce: factorization check failed");

  return ReductionTrace{psi, std::move(gens), std::move(v),
                        CanonicalForm{cur, jacobian(cur)}};
}

bool same_coset(const IAEndomorphism &psi1, const IAEndomorphism &psi2) {
  if (!(psi1.config() == psi2.config()))
    throw DomainError("algebra config mismatch");
  return reduce(psi1).canonical.theta == reduce(psi2).canonical.theta;
}

std::optional<LieElement> is_inner(const IAEndomorphism &psi) {
  ReductionTrace trace = reduce(psi);
  if (!trace.canonical.theta.is_identity())
    return std::nullopt;
  return trace.combined_inner;
}

} // namespace metab
