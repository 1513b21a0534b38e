#pragma once

#include "metab/lie.hpp"

namespace metab {

// Element of the 2x2 upper-triangular associative envelope of the wreath
// product: [[0, a_row], [0, diag]] with the module part squaring to zero.
// Used as an independent cross-check of the BCH machinery.
struct TriangularRep {
  AlgebraConfig config;
  std::vector<TruncPoly> a_row; // per generator, cap c-1
  TruncPoly diag;               // cap c-1

  explicit TriangularRep(const AlgebraConfig &cfg);
  bool operator==(const TriangularRep &o) const;
};

// a_row from the wreath embedding, diag = sum beta_i t_i.
TriangularRep rep_of(const LieElement &u);

// exp(X) - 1 in closed form: module part a_row h(diag), diagonal e^diag.
struct TriangularExp {
  std::vector<TruncPoly> module_row;
  TruncPoly diag_exp;
};

TriangularExp rep_exp(const TriangularRep &x);

// Solve the envelope equation for the product with v acting first, the
// same order as compose(), and pull the solution back to the algebra.
LieElement rep_bch(const LieElement &u, const LieElement &v);

} // namespace metab
