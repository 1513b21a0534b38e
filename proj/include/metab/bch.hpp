#pragma once

#include "metab/lie.hpp"

namespace metab {

// Gerritzen's closed-form series c(t,u) = (e^u h(t) - h(u)) / (e^{t+u} - 1)
// after exact cancellation of the common factor t + u. Bivariate, the two
// variables render as t1 (= t) and t2 (= u).
struct BchSeries {
  int cap;
  TruncPoly series; // num_vars = 2
};

BchSeries gerritzen_c(int cap);

// Solution w of compose(exp_ad(u), exp_ad(v)) = exp_ad(w) (v acts first)
// by the closed formula H(v-bar, u-bar) + v_0 (1 + (ad u-bar) c) +
// u_0 (1 - (ad v-bar) c).
LieElement bch_compose(const LieElement &u, const LieElement &v);

} // namespace metab
