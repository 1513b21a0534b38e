#include "metab/wreath.hpp"

#include "metab/autgroup.hpp"
#include "metab/errors.hpp"

namespace metab {

WreathElement::WreathElement(const AlgebraConfig &cfg)
    : config(cfg), b_coords(static_cast<std::size_t>(cfg.rank), Rational(0)),
      a_coords(static_cast<std::size_t>(cfg.rank),
               TruncPoly(cfg.rank, cfg.deriv_cap())) {}

bool WreathElement::operator==(const WreathElement &o) const {
  return config == o.config && b_coords == o.b_coords && a_coords == o.a_coords;
}

WreathElement embed(const LieElement &u) {
  const AlgebraConfig &cfg = u.config();
  WreathElement w(cfg);
  for (int i = 0; i < cfg.rank; ++i) {
    const Rational &beta = u.linear()[static_cast<std::size_t>(i)];
    w.b_coords[static_cast<std::size_t>(i)] = beta;
    w.a_coords[static_cast<std::size_t>(i)].add_term(Monomial::one(cfg.rank),
                                                     beta);
  }
  for (const auto &[h, poly] : u.quad())
    for (const auto &[m, c] : poly.terms()) {
      w.a_coords[static_cast<std::size_t>(h.p)].add_term(m.times_var(h.q), c);
      w.a_coords[static_cast<std::size_t>(h.q)].add_term(m.times_var(h.p), -c);
    }
  return w;
}

WreathElement wreath_bracket(const WreathElement &x, const WreathElement &y) {
  if (!(x.config == y.config))
    throw DomainError("algebra config mismatch");
  const AlgebraConfig &cfg = x.config;
  auto linear_form = [&](const std::vector<Rational> &b) {
    TruncPoly f(cfg.rank, cfg.deriv_cap());
    for (int i = 0; i < cfg.rank; ++i)
      f.add_term(Monomial::var(cfg.rank, i), b[static_cast<std::size_t>(i)]);
    return f;
  };
  TruncPoly tx = linear_form(x.b_coords);
  TruncPoly ty = linear_form(y.b_coords);
  WreathElement r(cfg);
  for (int i = 0; i < cfg.rank; ++i)
    r.a_coords[static_cast<std::size_t>(i)] =
        x.a_coords[static_cast<std::size_t>(i)] * ty -
        y.a_coords[static_cast<std::size_t>(i)] * tx;
  return r;
}

std::vector<TruncPoly> partials(const LieElement &u) {
  return embed(u).a_coords;
}

bool membership(const AlgebraConfig &cfg,
                const std::vector<TruncPoly> &a_coords) {
  if (static_cast<int>(a_coords.size()) != cfg.rank)
    throw DomainError("coordinate count mismatch");
  TruncPoly sum(cfg.rank, cfg.nil_class);
  for (int i = 0; i < cfg.rank; ++i)
    sum += TruncPoly::variable(cfg.rank, cfg.nil_class, i) *
           a_coords[static_cast<std::size_t>(i)].recapped(cfg.nil_class);
  return sum.is_zero();
}

LieElement lift(const AlgebraConfig &cfg, const std::vector<Rational> &b_coords,
                const std::vector<TruncPoly> &a_coords) {
  if (static_cast<int>(b_coords.size()) != cfg.rank ||
      static_cast<int>(a_coords.size()) != cfg.rank)
    throw DomainError("coordinate count mismatch");

  // Peel off the linear contribution; the remainder must satisfy the
  // membership criterion for the commutator ideal.
  std::vector<TruncPoly> f;
  f.reserve(static_cast<std::size_t>(cfg.rank));
  for (int i = 0; i < cfg.rank; ++i) {
    TruncPoly fi = a_coords[static_cast<std::size_t>(i)];
    if (fi.num_vars() != cfg.rank || fi.cap() != cfg.deriv_cap())
      throw DomainError("lift: coordinate with wrong shape");
    fi.add_term(Monomial::one(cfg.rank), -b_coords[static_cast<std::size_t>(i)]);
    if (fi.constant_term() != 0)
      throw DomainError("lift: coordinates not in the image (constant term)");
    f.push_back(fi);
  }
  if (!membership(cfg, f))
    throw DomainError("lift: coordinates not in the image (membership)");

  LieElement u(cfg);
  for (int i = 0; i < cfg.rank; ++i)
    u.add_linear(i, b_coords[static_cast<std::size_t>(i)]);

  // For each q in increasing order, the t_q-divisible part of f_p (p > q)
  // is exactly t_q h_pq: earlier rounds removed all smaller variables and
  // the remaining h's involve only variables >= q.
  for (int q = 0; q < cfg.rank; ++q) {
    for (int p = q + 1; p < cfg.rank; ++p) {
      TruncPoly h(cfg.rank, cfg.quad_cap());
      for (const auto &[m, c] : f[static_cast<std::size_t>(p)].terms())
        if (m.exponent(q) > 0)
          h.add_term(m.div_var(q), c);
      if (h.is_zero())
        continue;
      for (const auto &[m, c] : h.terms()) {
        u.add_quad_term(p, q, m, c);
        f[static_cast<std::size_t>(p)].add_term(m.times_var(q), -c);
        f[static_cast<std::size_t>(q)].add_term(m.times_var(p), c);
      }
    }
  }
  for (const auto &fi : f)
    if (!fi.is_zero())
      throw DomainError("lift: coordinates not in the image (residual)");
  return u;
}

JacobianMatrix::JacobianMatrix(const AlgebraConfig &cfg)
    : cfg_(cfg),
      entries_(static_cast<std::size_t>(cfg.rank * cfg.rank),
               TruncPoly(cfg.rank, cfg.deriv_cap())) {}

JacobianMatrix JacobianMatrix::identity(const AlgebraConfig &cfg) {
  JacobianMatrix m(cfg);
  for (int i = 0; i < cfg.rank; ++i)
    m.entry(i, i) = TruncPoly::constant(cfg.rank, cfg.deriv_cap(), 1);
  return m;
}

const TruncPoly &JacobianMatrix::entry(int i, int j) const {
  return entries_[static_cast<std::size_t>(i * cfg_.rank + j)];
}

TruncPoly &JacobianMatrix::entry(int i, int j) {
  return entries_[static_cast<std::size_t>(i * cfg_.rank + j)];
}

std::vector<TruncPoly> JacobianMatrix::column(int j) const {
  std::vector<TruncPoly> col;
  col.reserve(static_cast<std::size_t>(cfg_.rank));
  for (int i = 0; i < cfg_.rank; ++i)
    col.push_back(entry(i, j));
  return col;
}

JacobianMatrix JacobianMatrix::operator*(const JacobianMatrix &other) const {
  if (!(cfg_ == other.cfg_))
    throw DomainError("algebra config mismatch");
  JacobianMatrix r(cfg_);
  for (int i = 0; i < cfg_.rank; ++i)
    for (int j = 0; j < cfg_.rank; ++j)
      for (int k = 0; k < cfg_.rank; ++k)
        r.entry(i, j) += entry(i, k) * other.entry(k, j);
  return r;
}

JacobianMatrix JacobianMatrix::operator+(const JacobianMatrix &other) const {
  if (!(cfg_ == other.cfg_))
    throw DomainError("algebra config mismatch");
  JacobianMatrix r(*this);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] += other.entries_[k];
  return r;
}

JacobianMatrix JacobianMatrix::operator-(const JacobianMatrix &other) const {
  if (!(cfg_ == other.cfg_))
    throw DomainError("algebra config mismatch");
  JacobianMatrix r(*this);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] -= other.entries_[k];
  return r;
}

bool JacobianMatrix::operator==(const JacobianMatrix &other) const {
  return cfg_ == other.cfg_ && entries_ == other.entries_;
}

JacobianMatrix jacobian(const IAEndomorphism &phi) {
  const AlgebraConfig &cfg = phi.config();
  JacobianMatrix J(cfg);
  for (int j = 0; j < cfg.rank; ++j) {
    std::vector<TruncPoly> col = partials(phi.image(j));
    for (int i = 0; i < cfg.rank; ++i)
      J.entry(i, j) = col[static_cast<std::size_t>(i)];
  }
  return J;
}

} // namespace metab
