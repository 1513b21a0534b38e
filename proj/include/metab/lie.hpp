#pragma once

#include <map>
#include <string>
#include <vector>

#include "metab/truncpoly.hpp"

namespace metab {

// Free metabelian nilpotent Lie algebra of rank m and class c.
struct AlgebraConfig {
  int rank;      // m >= 2
  int nil_class; // c >= 2

  AlgebraConfig(int m, int c);
  bool operator==(const AlgebraConfig &o) const {
    return rank == o.rank && nil_class == o.nil_class;
  }
  // Commutator-part polynomials have degree <= c-2; derivatives <= c-1.
  int quad_cap() const { return nil_class - 2; }
  int deriv_cap() const { return nil_class - 1; }
};

// Head [y_p, y_q] of a basis commutator, p > q, 0-based generator indices.
// Ordered by (q, p) for canonical iteration.
struct HeadPair {
  int p;
  int q;
  bool operator<(const HeadPair &o) const {
    return q != o.q ? q < o.q : p < o.p;
  }
  bool operator==(const HeadPair &o) const { return p == o.p && q == o.q; }
};

// Element in normal form: linear part sum beta_r y_r plus commutator part
// sum_{p>q} [y_p, y_q] h_pq(ad y_q, ..., ad y_m). Each h_pq is a TruncPoly
// in t_1..t_m of degree <= c-2 involving only t_q..t_m; zero entries are
// never stored.
class LieElement {
public:
  explicit LieElement(const AlgebraConfig &cfg);
  static LieElement generator(const AlgebraConfig &cfg, int i);
  static LieElement from_linear(const AlgebraConfig &cfg,
                                std::vector<Rational> coeffs);

  const AlgebraConfig &config() const { return cfg_; }
  const std::vector<Rational> &linear() const { return linear_; }
  const std::map<HeadPair, TruncPoly> &quad() const { return quad_; }
  bool is_zero() const;
  bool has_linear_part() const;
  TruncPoly quad_poly(int p, int q) const; // zero poly if absent

  // Adds coeff * [y_p, y_q] * monomial-in-ad, straightening heads whose
  // tail dips below q and truncating past total length c.
  void add_quad_term(int p, int q, const Monomial &mono, const Rational &c);
  void add_linear(int i, const Rational &c);

  LieElement operator+(const LieElement &other) const;
  LieElement operator-(const LieElement &other) const;
  LieElement operator-() const;
  LieElement operator*(const Rational &c) const;
  bool operator==(const LieElement &other) const;
  bool operator!=(const LieElement &other) const { return !(*this == other); }

  // Linear part as the polynomial sum beta_r t_r at the given cap.
  TruncPoly linear_form(int cap) const;
  LieElement linear_part() const;
  LieElement quad_part() const;

  std::string str() const;

private:
  AlgebraConfig cfg_;
  std::vector<Rational> linear_;
  std::map<HeadPair, TruncPoly> quad_;
};

inline LieElement operator*(const Rational &c, const LieElement &u) {
  return u * c;
}

// Normal form of [y_p, y_q] ad y_j (0-based indices).
LieElement straighten(const AlgebraConfig &cfg, int p, int q, int j);

// Lie bracket via the metabelian expansion [u,v] =
// [u-bar, v-bar] + [u_0, v-bar] - [v_0, u-bar].
LieElement bracket(const LieElement &u, const LieElement &v);

// u * g(ad y_1, ..., ad y_m) for u in the commutator ideal.
LieElement apply_ad_poly(const LieElement &u, const TruncPoly &g);

// Image in the class-c' quotient, c' <= c.
LieElement project_to_class(const LieElement &u, int new_class);

} // namespace metab
