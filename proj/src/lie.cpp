#include "metab/lie.hpp"

#include <sstream>

#include "metab/errors.hpp"

namespace metab {

AlgebraConfig::AlgebraConfig(int m, int c) : rank(m), nil_class(c) {
  if (m < 2)
    throw DomainError("rank must be at least 2");
  if (c < 2)
    throw DomainError("nilpotency class must be at least 2");
}

LieElement::LieElement(const AlgebraConfig &cfg)
    : cfg_(cfg), linear_(static_cast<std::size_t>(cfg.rank), Rational(0)) {}

LieElement LieElement::generator(const AlgebraConfig &cfg, int i) {
  LieElement u(cfg);
  u.add_linear(i, 1);
  return u;
}

LieElement LieElement::from_linear(const AlgebraConfig &cfg,
                                   std::vector<Rational> coeffs) {
  if (static_cast<int>(coeffs.size()) != cfg.rank)
    throw DomainError("linear coefficient count mismatch");
  LieElement u(cfg);
  u.linear_ = std::move(coeffs);
  return u;
}

bool LieElement::is_zero() const {
  return quad_.empty() && !has_linear_part();
}

bool LieElement::has_linear_part() const {
  for (const auto &c : linear_)
    if (c != 0)
      return true;
  return false;
}

TruncPoly LieElement::quad_poly(int p, int q) const {
  auto it = quad_.find(HeadPair{p, q});
  return it == quad_.end() ? TruncPoly(cfg_.rank, cfg_.quad_cap())
                           : it->second;
}

void LieElement::add_linear(int i, const Rational &c) {
  if (i < 0 || i >= cfg_.rank)
    throw DomainError("generator index out of range");
  linear_[static_cast<std::size_t>(i)] += c;
}

void LieElement::add_quad_term(int p, int q, const Monomial &mono,
                               const Rational &c) {
  if (!(p > q && q >= 0 && p < cfg_.rank))
    throw DomainError("invalid head pair");
  if (c == 0 || mono.total_degree() > cfg_.quad_cap())
    return;
  // Straighten: a tail generator below the head minimum rewrites via
  // Jacobi, [y_p,y_q] ad y_j = [y_p,y_j] ad y_q - [y_q,y_j] ad y_p,
  // strictly decreasing the head minimum.
  for (int j = 0; j < q; ++j) {
    if (mono.exponent(j) > 0) {
      Monomial rest = mono.div_var(j);
      add_quad_term(p, j, rest.times_var(q), c);
      add_quad_term(q, j, rest.times_var(p), -c);
      return;
    }
  }
  auto [it, inserted] =
      quad_.emplace(HeadPair{p, q}, TruncPoly(cfg_.rank, cfg_.quad_cap()));
  it->second.add_term(mono, c);
  if (it->second.is_zero())
    quad_.erase(it);
}

LieElement LieElement::operator+(const LieElement &other) const {
  if (!(cfg_ == other.cfg_))
    throw DomainError("algebra config mismatch");
  LieElement r(*this);
  for (int i = 0; i < cfg_.rank; ++i)
    r.linear_[static_cast<std::size_t>(i)] +=
        other.linear_[static_cast<std::size_t>(i)];
  for (const auto &[h, poly] : other.quad_)
    for (const auto &[m, c] : poly.terms())
      r.add_quad_term(h.p, h.q, m, c);
  return r;
}

LieElement LieElement::operator-(const LieElement &other) const {
  return *this + (-other);
}

LieElement LieElement::operator-() const { return *this * Rational(-1); }

LieElement LieElement::operator*(const Rational &c) const {
  LieElement r(cfg_);
  if (c == 0)
    return r;
  for (int i = 0; i < cfg_.rank; ++i)
    r.linear_[static_cast<std::size_t>(i)] =
        linear_[static_cast<std::size_t>(i)] * c;
  for (const auto &[h, poly] : quad_)
    r.quad_.emplace(h, poly * c);
  return r;
}

bool LieElement::operator==(const LieElement &other) const {
  return cfg_ == other.cfg_ && linear_ == other.linear_ &&
         quad_ == other.quad_;
}

TruncPoly LieElement::linear_form(int cap) const {
  TruncPoly f(cfg_.rank, cap);
  for (int i = 0; i < cfg_.rank; ++i)
    f.add_term(Monomial::var(cfg_.rank, i),
               linear_[static_cast<std::size_t>(i)]);
  return f;
}

LieElement LieElement::linear_part() const {
  return from_linear(cfg_, linear_);
}

LieElement LieElement::quad_part() const {
  LieElement r(cfg_);
  r.quad_ = quad_;
  return r;
}

std::string LieElement::str() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational &coeff, const std::string &atom) {
    Rational a = coeff;
    if (first) {
      if (a < 0) {
        os << '-';
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0)
        a = -a;
    }
    if (a == 1)
      os << atom;
    else
      os << to_string(a) << '*' << atom;
    first = false;
  };
  for (int i = 0; i < cfg_.rank; ++i) {
    const Rational &c = linear_[static_cast<std::size_t>(i)];
    if (c != 0)
      emit(c, "y" + std::to_string(i + 1));
  }
  for (const auto &[h, poly] : quad_) {
    for (const auto &[m, c] : poly.terms()) {
      std::ostringstream atom;
      atom << "[y" << (h.p + 1) << ",y" << (h.q + 1);
      for (int i = 0; i < cfg_.rank; ++i)
        for (int e = 0; e < m.exponent(i); ++e)
          atom << ",y" << (i + 1);
      atom << ']';
      emit(c, atom.str());
    }
  }
  return os.str();
}

LieElement straighten(const AlgebraConfig &cfg, int p, int q, int j) {
  if (!(p > q && q >= 0 && p < cfg.rank && j >= 0 && j < cfg.rank))
    throw DomainError("straighten: index out of range");
  LieElement r(cfg);
  r.add_quad_term(p, q, Monomial::var(cfg.rank, j), 1);
  return r;
}

LieElement bracket(const LieElement &u, const LieElement &v) {
  if (!(u.config() == v.config()))
    throw DomainError("algebra config mismatch");
  const AlgebraConfig &cfg = u.config();
  LieElement r(cfg);
  // [u-bar, v-bar]
  for (int p = 1; p < cfg.rank; ++p)
    for (int q = 0; q < p; ++q) {
      Rational c = u.linear()[static_cast<std::size_t>(p)] *
                       v.linear()[static_cast<std::size_t>(q)] -
                   u.linear()[static_cast<std::size_t>(q)] *
                       v.linear()[static_cast<std::size_t>(p)];
      r.add_quad_term(p, q, Monomial::one(cfg.rank), c);
    }
  // [u_0, v-bar] - [v_0, u-bar]; [u_0, v_0] vanishes by the metabelian law.
  auto add_mixed = [&](const LieElement &w0, const LieElement &lin,
                       const Rational &sign) {
    for (const auto &[h, poly] : w0.quad())
      for (int j = 0; j < cfg.rank; ++j) {
        const Rational &beta = lin.linear()[static_cast<std::size_t>(j)];
        if (beta == 0)
          continue;
        for (const auto &[m, c] : poly.terms())
          r.add_quad_term(h.p, h.q, m.times_var(j), sign * beta * c);
      }
  };
  add_mixed(u, v, 1);
  add_mixed(v, u, -1);
  return r;
}

LieElement apply_ad_poly(const LieElement &u, const TruncPoly &g) {
  if (u.has_linear_part())
    throw DomainError("apply_ad_poly: element must lie in the commutator ideal");
  const AlgebraConfig &cfg = u.config();
  if (g.num_vars() != cfg.rank)
    throw DomainError("apply_ad_poly: variable count mismatch");
  LieElement r(cfg);
  for (const auto &[h, poly] : u.quad())
    for (const auto &[mu, cu] : poly.terms())
      for (const auto &[mg, cg] : g.terms()) {
        if (mu.total_degree() + mg.total_degree() > cfg.quad_cap())
          continue;
        r.add_quad_term(h.p, h.q, mu.times(mg), cu * cg);
      }
  return r;
}

LieElement project_to_class(const LieElement &u, int new_class) {
  const AlgebraConfig &cfg = u.config();
  if (new_class > cfg.nil_class)
    throw DomainError("project_to_class: class may only decrease");
  AlgebraConfig ncfg(cfg.rank, new_class);
  LieElement r(ncfg);
  for (int i = 0; i < cfg.rank; ++i)
    r.add_linear(i, u.linear()[static_cast<std::size_t>(i)]);
  for (const auto &[h, poly] : u.quad())
    for (const auto &[m, c] : poly.terms())
      r.add_quad_term(h.p, h.q, m, c);
  return r;
}

} // namespace metab
