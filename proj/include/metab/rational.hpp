#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace metab {

// Exact rational scalars. cpp_rational keeps values canonical
// (reduced, positive denominator, 0 stored as 0/1).
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational &r) { return r.str(); }

inline Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k)
    r *= k;
  return r;
}

} // namespace metab
