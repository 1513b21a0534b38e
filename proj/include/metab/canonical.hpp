#pragma once

#include <optional>

#include "metab/autgroup.hpp"

namespace metab {

// t1-grading of a polynomial: f = t1^2 p + t1 q + r with q and r free of t1.
struct T1Split {
  TruncPoly p;
  TruncPoly q;
  TruncPoly r;
};

T1Split t1_split(const TruncPoly &f);

// Canonical outer-coset representative together with its cached Jacobian.
struct CanonicalForm {
  IAEndomorphism theta;
  JacobianMatrix jacobian;
};

// Full record of the reduction psi = exp(ad v) theta.
struct ReductionTrace {
  IAEndomorphism input;
  std::vector<LieElement> inner_generators; // u_0 .. u_{m-1}
  LieElement combined_inner;                // v
  CanonicalForm canonical;
};

// Does J(phi) satisfy every canonical-form condition on the first column
// and the (1,2) entry?
bool shape_check(const IAEndomorphism &phi);

// Strip the inner part of an IA-automorphism, one variable at a time,
// producing the canonical representative of its coset.
ReductionTrace reduce(const IAEndomorphism &psi);

bool same_coset(const IAEndomorphism &psi1, const IAEndomorphism &psi2);

// If psi is inner, a generator v with exp(ad v) = psi (unique only modulo
// the centre); otherwise absent.
std::optional<LieElement> is_inner(const IAEndomorphism &psi);

} // namespace metab
