#pragma once

#include <vector>

#include "metab/wreath.hpp"

namespace metab {

// Endomorphism y_j -> y_j + w_j with every w_j in the commutator ideal.
// All such maps are invertible in the nilpotent quotient.
class IAEndomorphism {
public:
  static IAEndomorphism identity(const AlgebraConfig &cfg);
  // deltas[j] = w_j; each must have zero linear part.
  IAEndomorphism(const AlgebraConfig &cfg, std::vector<LieElement> deltas);

  const AlgebraConfig &config() const { return cfg_; }
  const LieElement &delta(int j) const {
    return deltas_[static_cast<std::size_t>(j)];
  }
  LieElement image(int j) const; // y_j + w_j
  bool is_identity() const;

  bool operator==(const IAEndomorphism &other) const;
  bool operator!=(const IAEndomorphism &other) const {
    return !(*this == other);
  }

private:
  AlgebraConfig cfg_;
  std::vector<LieElement> deltas_;
};

// phi(u), expanded by the metabelian law (terms with two substituted
// increments vanish).
LieElement apply(const IAEndomorphism &phi, const LieElement &u);

// (phi psi)(x) = phi(psi(x)); psi acts first. J(compose(phi,psi)) =
// J(phi) J(psi).
IAEndomorphism compose(const IAEndomorphism &phi, const IAEndomorphism &psi);

struct InnerAutomorphism {
  LieElement generator;
  IAEndomorphism expansion;
};

// exp(ad u): y_j -> y_j + [y_j, u] sum_k (ad u-bar)^k / (k+1)!.
InnerAutomorphism exp_ad(const LieElement &u);

// Closed-form Jacobian I_m + (D-bar + D_0) T of exp(ad u).
JacobianMatrix inner_jacobian(const LieElement &u);

// Inverse of the Jacobian semigroup isomorphism: the unique IA-endomorphism
// with the given matrix. Columns of M - I must pass membership.
IAEndomorphism from_jacobian(const JacobianMatrix &M);

// Inverse map, computed through the finite Neumann series of the Jacobian.
IAEndomorphism inverse(const IAEndomorphism &phi);

} // namespace metab
