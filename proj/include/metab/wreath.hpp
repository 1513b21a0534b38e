#pragma once

#include <vector>

#include "metab/lie.hpp"

namespace metab {

// Image of an element under the wreath-product embedding:
// sum a_i f_i(t_1..t_m) + sum beta_i b_i.
struct WreathElement {
  AlgebraConfig config;
  std::vector<Rational> b_coords;  // size m
  std::vector<TruncPoly> a_coords; // size m, cap c-1

  explicit WreathElement(const AlgebraConfig &cfg);
  bool operator==(const WreathElement &o) const;
};

// y_i -> a_i + b_i extended to the whole algebra; a commutator term
// [y_p,y_q] h contributes t_q h to a_p and -t_p h to a_q.
WreathElement embed(const LieElement &u);

// [x, y] in the wreath product: b-part vanishes, a-part is
// x_a * (linear form of y_b) - y_a * (linear form of x_b).
WreathElement wreath_bracket(const WreathElement &x, const WreathElement &y);

// Partial derivatives d u / d y_i, the a-coordinates of embed(u).
std::vector<TruncPoly> partials(const LieElement &u);

// Membership in the image of the commutator ideal: sum t_i f_i = 0,
// checked at cap c.
bool membership(const AlgebraConfig &cfg,
                const std::vector<TruncPoly> &a_coords);

// Constructive inverse of embed on its image. Throws DomainError when the
// coordinates are not the image of any element.
LieElement lift(const AlgebraConfig &cfg, const std::vector<Rational> &b_coords,
                const std::vector<TruncPoly> &a_coords);

class IAEndomorphism; // autgroup.hpp

// m x m matrix over the truncated polynomial ring, entries at cap c-1.
// Row index = differentiation variable, column index = generator image.
class JacobianMatrix {
public:
  explicit JacobianMatrix(const AlgebraConfig &cfg); // zero matrix
  static JacobianMatrix identity(const AlgebraConfig &cfg);

  const AlgebraConfig &config() const { return cfg_; }
  const TruncPoly &entry(int i, int j) const;
  TruncPoly &entry(int i, int j);
  std::vector<TruncPoly> column(int j) const;

  JacobianMatrix operator*(const JacobianMatrix &other) const;
  JacobianMatrix operator+(const JacobianMatrix &other) const;
  JacobianMatrix operator-(const JacobianMatrix &other) const;
  bool operator==(const JacobianMatrix &other) const;
  bool operator!=(const JacobianMatrix &other) const {
    return !(*this == other);
  }

private:
  AlgebraConfig cfg_;
  std::vector<TruncPoly> entries_; // row-major
};

JacobianMatrix jacobian(const IAEndomorphism &phi);

} // namespace metab
