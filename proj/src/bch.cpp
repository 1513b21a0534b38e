#include "metab/bch.hpp"

#include "metab/errors.hpp"

namespace metab {

BchSeries gerritzen_c(int cap) {
  if (cap < 0)
    throw DomainError("gerritzen_c: negative cap");
  // Numerator e^u h(t) - h(u) at cap+1, exactly divisible by t + u;
  // the remaining denominator is h(t+u), a unit.
  TruncPoly t = TruncPoly::variable(2, cap + 1, 0);
  TruncPoly u = TruncPoly::variable(2, cap + 1, 1);
  TruncPoly num = exp_trunc(u) * h_trunc(t) - h_trunc(u);
  TruncPoly quotient = num.exact_div_linear(t + u); // cap
  TruncPoly denom = h_trunc((t + u).recapped(cap));
  return BchSeries{cap, quotient * denom.unit_inverse()};
}

LieElement bch_compose(const LieElement &u, const LieElement &v) {
  if (!(u.config() == v.config()))
    throw DomainError("algebra config mismatch");
  const AlgebraConfig &cfg = u.config();
  const int cap = cfg.quad_cap();

  // The closed formula produces the word for the factor that acts first on
  // the left of the series arguments; compose() applies its right factor
  // first, so v takes that role here.
  TruncPoly lin_u = u.linear_form(cap);
  TruncPoly lin_v = v.linear_form(cap);
  TruncPoly c = subst_bivariate(gerritzen_c(cap).series, lin_v, lin_u);
  TruncPoly one = TruncPoly::constant(cfg.rank, cap, 1);

  LieElement ubar = u.linear_part();
  LieElement vbar = v.linear_part();
  LieElement w = ubar + vbar +
                 apply_ad_poly(bracket(vbar, ubar), c) +
                 apply_ad_poly(v.quad_part(), one + lin_u * c) +
                 apply_ad_poly(u.quad_part(), one - lin_v * c);
  return w;
}

} // namespace metab
