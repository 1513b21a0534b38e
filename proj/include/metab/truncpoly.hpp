#pragma once

#include <map>
#include <string>
#include <vector>

#include "metab/rational.hpp"

namespace metab {

// Monomial in t_1..t_n, stored as an exponent vector (0-based indices in
// code, 1-based names in rendered output).
class Monomial {
public:
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(int num_vars);
  static Monomial var(int num_vars, int i);

  int num_vars() const { return static_cast<int>(exp_.size()); }
  int exponent(int i) const { return exp_[static_cast<std::size_t>(i)]; }
  int total_degree() const { return degree_; }

  Monomial times(const Monomial &other) const;
  Monomial times_var(int i) const;
  // Quotient by t_i; exponent must be positive.
  Monomial div_var(int i) const;
  bool divisible_by(const Monomial &other) const;
  Monomial div(const Monomial &other) const;

  // Graded-lex: lower total degree first; within a degree, lexicographically
  // greater exponent vector first (so t1 precedes t2).
  bool operator<(const Monomial &other) const;
  bool operator==(const Monomial &other) const { return exp_ == other.exp_; }

  std::string str() const; // "1", "t1", "t1^2*t3"

private:
  std::vector<int> exp_;
  int degree_;
};

// Sparse multivariate polynomial over Q, truncated at a total-degree cap.
// The cap is part of the value: mixing caps or variable counts is an error.
class TruncPoly {
public:
  TruncPoly(int num_vars, int cap); // zero
  static TruncPoly constant(int num_vars, int cap, const Rational &c);
  static TruncPoly variable(int num_vars, int cap, int i);

  int num_vars() const { return num_vars_; }
  int cap() const { return cap_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational> &terms() const { return terms_; }

  Rational coeff(const Monomial &m) const;
  Rational constant_term() const;
  int degree() const; // -1 for zero

  // Adds c * m, dropping the term if it exceeds the cap or cancels.
  void add_term(const Monomial &m, const Rational &c);

  TruncPoly operator+(const TruncPoly &other) const;
  TruncPoly operator-(const TruncPoly &other) const;
  TruncPoly operator-() const;
  TruncPoly operator*(const TruncPoly &other) const;
  TruncPoly operator*(const Rational &c) const;
  TruncPoly &operator+=(const TruncPoly &other);
  TruncPoly &operator-=(const TruncPoly &other);
  bool operator==(const TruncPoly &other) const;
  bool operator!=(const TruncPoly &other) const { return !(*this == other); }

  // Same terms re-capped; lowering the cap truncates.
  TruncPoly recapped(int new_cap) const;

  // Multiplicative inverse at the shared cap; constant term must be nonzero.
  TruncPoly unit_inverse() const;

  // All terms with positive exponent in variable i dropped.
  TruncPoly subst_zero(int i) const;
  bool depends_on(int i) const;

  // Exact quotient by a nonzero homogeneous linear form, degree by degree.
  // Result carries cap-1. Throws DomainError on nonzero remainder.
  TruncPoly exact_div_linear(const TruncPoly &linear) const;

  // Homogeneous component of given degree (same cap).
  TruncPoly homogeneous_part(int d) const;

  std::string str() const; // canonical: "1/2 - 1/12*t1 + 1/12*t2"

private:
  void check_compatible(const TruncPoly &other) const;

  int num_vars_;
  int cap_;
  std::map<Monomial, Rational> terms_;
};

inline TruncPoly operator*(const Rational &c, const TruncPoly &p) {
  return p * c;
}

// exp(f) = sum f^k / k!, requires zero constant term.
TruncPoly exp_trunc(const TruncPoly &f);

// h(f) = (e^f - 1)/f = sum f^k / (k+1)!, requires zero constant term.
TruncPoly h_trunc(const TruncPoly &f);

// Evaluate a bivariate series at two polynomials (shared num_vars/cap).
TruncPoly subst_bivariate(const TruncPoly &series, const TruncPoly &a,
                          const TruncPoly &b);

} // namespace metab
