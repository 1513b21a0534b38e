#include "metab/autgroup.hpp"

#include "metab/errors.hpp"

namespace metab {

IAEndomorphism IAEndomorphism::identity(const AlgebraConfig &cfg) {
  return IAEndomorphism(
      cfg, std::vector<LieElement>(static_cast<std::size_t>(cfg.rank),
                                   LieElement(cfg)));
}

IAEndomorphism::IAEndomorphism(const AlgebraConfig &cfg,
                               std::vector<LieElement> deltas)
    : cfg_(cfg), deltas_(std::move(deltas)) {
  if (static_cast<int>(deltas_.size()) != cfg.rank)
    throw DomainError("IA endomorphism needs one increment per generator");
  for (const auto &w : deltas_) {
    if (!(w.config() == cfg))
      throw DomainError("algebra config mismatch");
    if (w.has_linear_part())
      throw DomainError("IA increment must lie in the commutator ideal");
  }
}

LieElement IAEndomorphism::image(int j) const {
  return LieElement::generator(cfg_, j) + deltas_[static_cast<std::size_t>(j)];
}

bool IAEndomorphism::is_identity() const {
  for (const auto &w : deltas_)
    if (!w.is_zero())
      return false;
  return true;
}

bool IAEndomorphism::operator==(const IAEndomorphism &other) const {
  return cfg_ == other.cfg_ && deltas_ == other.deltas_;
}

LieElement apply(const IAEndomorphism &phi, const LieElement &u) {
  if (!(phi.config() == u.config()))
    throw DomainError("algebra config mismatch");
  const AlgebraConfig &cfg = u.config();
  LieElement r = u; // linear part survives, commutator part is corrected
  for (int j = 0; j < cfg.rank; ++j) {
    const Rational &beta = u.linear()[static_cast<std::size_t>(j)];
    if (beta != 0)
      r = r + phi.delta(j) * beta;
  }
  // [y_p + w_p, y_q + w_q] h = ([y_p,y_q] + [w_p,y_q] + [y_p,w_q]) h;
  // the ad-polynomial is unchanged since ad w kills the commutator ideal.
  for (const auto &[h, poly] : u.quad()) {
    const LieElement &wp = phi.delta(h.p);
    const LieElement &wq = phi.delta(h.q);
    if (wp.is_zero() && wq.is_zero())
      continue;
    LieElement corr = bracket(wp, LieElement::generator(cfg, h.q)) +
                      bracket(LieElement::generator(cfg, h.p), wq);
    r = r + apply_ad_poly(corr, poly.recapped(cfg.quad_cap()));
  }
  return r;
}

IAEndomorphism compose(const IAEndomorphism &phi, const IAEndomorphism &psi) {
  if (!(phi.config() == psi.config()))
    throw DomainError("algebra config mismatch");
  const AlgebraConfig &cfg = phi.config();
  std::vector<LieElement> deltas;
  deltas.reserve(static_cast<std::size_t>(cfg.rank));
  for (int j = 0; j < cfg.rank; ++j)
    deltas.push_back(phi.delta(j) + apply(phi, psi.delta(j)));
  return IAEndomorphism(cfg, std::move(deltas));
}

InnerAutomorphism exp_ad(const LieElement &u) {
  const AlgebraConfig &cfg = u.config();
  TruncPoly series = h_trunc(u.linear_form(cfg.quad_cap()));
  std::vector<LieElement> deltas;
  deltas.reserve(static_cast<std::size_t>(cfg.rank));
  for (int j = 0; j < cfg.rank; ++j)
    deltas.push_back(
        apply_ad_poly(bracket(LieElement::generator(cfg, j), u), series));
  return InnerAutomorphism{u, IAEndomorphism(cfg, std::move(deltas))};
}

JacobianMatrix inner_jacobian(const LieElement &u) {
  const AlgebraConfig &cfg = u.config();
  const int cap = cfg.deriv_cap();
  JacobianMatrix D(cfg); // D-bar + D_0
  for (int i = 0; i < cfg.rank; ++i)
    for (int j = 0; j < cfg.rank; ++j) {
      TruncPoly &e = D.entry(i, j);
      if (i == j) {
        for (int k = 0; k < cfg.rank; ++k)
          if (k != i)
            e.add_term(Monomial::var(cfg.rank, k),
                       u.linear()[static_cast<std::size_t>(k)]);
      } else {
        e.add_term(Monomial::var(cfg.rank, j),
                   -u.linear()[static_cast<std::size_t>(i)]);
      }
    }
  std::vector<TruncPoly> f = partials(u.quad_part());
  for (int i = 0; i < cfg.rank; ++i)
    for (int j = 0; j < cfg.rank; ++j)
      D.entry(i, j) -= TruncPoly::variable(cfg.rank, cap, j) *
                       f[static_cast<std::size_t>(i)];
  TruncPoly T = h_trunc(u.linear_form(cap));
  JacobianMatrix J = JacobianMatrix::identity(cfg);
  for (int i = 0; i < cfg.rank; ++i)
    for (int j = 0; j < cfg.rank; ++j)
      J.entry(i, j) += D.entry(i, j) * T;
  return J;
}

IAEndomorphism from_jacobian(const JacobianMatrix &M) {
  const AlgebraConfig &cfg = M.config();
  std::vector<LieElement> deltas;
  deltas.reserve(static_cast<std::size_t>(cfg.rank));
  std::vector<Rational> zero_b(static_cast<std::size_t>(cfg.rank), Rational(0));
  for (int j = 0; j < cfg.rank; ++j) {
    std::vector<TruncPoly> col = M.column(j);
    col[static_cast<std::size_t>(j)].add_term(Monomial::one(cfg.rank), -1);
    if (!membership(cfg, col))
      throw DomainError("from_jacobian: matrix is not in I_m + S");
    deltas.push_back(lift(cfg, zero_b, col));
  }
  return IAEndomorphism(cfg, std::move(deltas));
}

IAEndomorphism inverse(const IAEndomorphism &phi) {
  const AlgebraConfig &cfg = phi.config();
  JacobianMatrix N = JacobianMatrix::identity(cfg) - jacobian(phi);
  // Entries of N have no constant term, so the Neumann series is finite.
  JacobianMatrix inv = JacobianMatrix::identity(cfg);
  JacobianMatrix power = JacobianMatrix::identity(cfg);
  for (int k = 1; k <= cfg.deriv_cap(); ++k) {
    power = power * N;
    inv = inv + power;
  }
  return from_jacobian(inv);
}

} // namespace metab
