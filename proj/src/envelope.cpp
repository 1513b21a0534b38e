#include "metab/envelope.hpp"

#include "metab/errors.hpp"
#include "metab/wreath.hpp"

namespace metab {

TriangularRep::TriangularRep(const AlgebraConfig &cfg)
    : config(cfg), a_row(static_cast<std::size_t>(cfg.rank),
                         TruncPoly(cfg.rank, cfg.deriv_cap())),
      diag(cfg.rank, cfg.deriv_cap()) {}

bool TriangularRep::operator==(const TriangularRep &o) const {
  return config == o.config && a_row == o.a_row && diag == o.diag;
}

TriangularRep rep_of(const LieElement &u) {
  TriangularRep x(u.config());
  x.a_row = partials(u);
  x.diag = u.linear_form(u.config().deriv_cap());
  return x;
}

TriangularExp rep_exp(const TriangularRep &x) {
  TriangularExp e{x.a_row, exp_trunc(x.diag)};
  TruncPoly h = h_trunc(x.diag);
  for (auto &row : e.module_row)
    row = row * h;
  return e;
}

LieElement rep_bch(const LieElement &u, const LieElement &v) {
  if (!(u.config() == v.config()))
    throw DomainError("algebra config mismatch");
  const AlgebraConfig &cfg = u.config();

  TriangularRep x = rep_of(u);
  TriangularRep y = rep_of(v);
  TruncPoly exp_dx = exp_trunc(x.diag);
  TruncPoly hx = h_trunc(x.diag);
  TruncPoly hy = h_trunc(y.diag);
  // v acts first, as in compose(). Module part of the product:
  // a_Y h(d_Y) e^{d_X} + a_X h(d_X).
  TruncPoly hz_inv = h_trunc(x.diag + y.diag).unit_inverse();
  std::vector<TruncPoly> a_z;
  std::vector<Rational> b_z;
  a_z.reserve(static_cast<std::size_t>(cfg.rank));
  for (int i = 0; i < cfg.rank; ++i) {
    TruncPoly b = y.a_row[static_cast<std::size_t>(i)] * hy * exp_dx +
                  x.a_row[static_cast<std::size_t>(i)] * hx;
    a_z.push_back(b * hz_inv);
    b_z.push_back(u.linear()[static_cast<std::size_t>(i)] +
                  v.linear()[static_cast<std::size_t>(i)]);
  }
  try {
    return lift(cfg, b_z, a_z);
  } catch (const DomainError &e) {
    throw InternalError(std::string("rep_bch: envelope solution left the "
                                    "embedding image: ") +
                        e.what());
  }
}

} // namespace metab
