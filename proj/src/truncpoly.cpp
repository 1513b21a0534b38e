#include "metab/truncpoly.hpp"

#include <numeric>
#include <sstream>

#include "metab/errors.hpp"

namespace metab {

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
  degree_ = 0;
  for (int e : exp_) {
    if (e < 0)
      throw DomainError("negative exponent in monomial");
    degree_ += e;
  }
}

Monomial Monomial::one(int num_vars) {
  return Monomial(std::vector<int>(static_cast<std::size_t>(num_vars), 0));
}

Monomial Monomial::var(int num_vars, int i) {
  std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
  e.at(static_cast<std::size_t>(i)) = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::times(const Monomial &other) const {
  std::vector<int> e(exp_);
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] += other.exp_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::times_var(int i) const {
  std::vector<int> e(exp_);
  ++e.at(static_cast<std::size_t>(i));
  return Monomial(std::move(e));
}

Monomial Monomial::div_var(int i) const {
  std::vector<int> e(exp_);
  if (e.at(static_cast<std::size_t>(i)) <= 0)
    throw DomainError("monomial not divisible by variable");
  --e[static_cast<std::size_t>(i)];
  return Monomial(std::move(e));
}

bool Monomial::divisible_by(const Monomial &other) const {
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] < other.exp_[i])
      return false;
  return true;
}

Monomial Monomial::div(const Monomial &other) const {
  std::vector<int> e(exp_);
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] -= other.exp_[i];
    if (e[i] < 0)
      throw DomainError("monomial division with remainder");
  }
  return Monomial(std::move(e));
}

bool Monomial::operator<(const Monomial &other) const {
  if (degree_ != other.degree_)
    return degree_ < other.degree_;
  return exp_ > other.exp_; // lex-greater exponent vector first
}

std::string Monomial::str() const {
  if (degree_ == 0)
    return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    if (exp_[i] == 0)
      continue;
    if (!first)
      os << '*';
    os << 't' << (i + 1);
    if (exp_[i] > 1)
      os << '^' << exp_[i];
    first = false;
  }
  return os.str();
}

TruncPoly::TruncPoly(int num_vars, int cap) : num_vars_(num_vars), cap_(cap) {
  if (num_vars < 1 || cap < 0)
    throw DomainError("invalid TruncPoly dimensions");
}

TruncPoly TruncPoly::constant(int num_vars, int cap, const Rational &c) {
  TruncPoly p(num_vars, cap);
  p.add_term(Monomial::one(num_vars), c);
  return p;
}

TruncPoly TruncPoly::variable(int num_vars, int cap, int i) {
  TruncPoly p(num_vars, cap);
  p.add_term(Monomial::var(num_vars, i), 1);
  return p;
}

Rational TruncPoly::coeff(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncPoly::constant_term() const {
  return coeff(Monomial::one(num_vars_));
}

int TruncPoly::degree() const {
  int d = -1;
  for (const auto &[m, c] : terms_)
    d = std::max(d, m.total_degree());
  return d;
}

void TruncPoly::add_term(const Monomial &m, const Rational &c) {
  if (m.num_vars() != num_vars_)
    throw DomainError("monomial/polynomial variable count mismatch");
  if (c == 0 || m.total_degree() > cap_)
    return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

void TruncPoly::check_compatible(const TruncPoly &other) const {
  if (num_vars_ != other.num_vars_)
    throw DomainError("variable count mismatch");
  if (cap_ != other.cap_)
    throw DomainError("truncation cap mismatch");
}

TruncPoly TruncPoly::operator+(const TruncPoly &other) const {
  TruncPoly r(*this);
  r += other;
  return r;
}

TruncPoly &TruncPoly::operator+=(const TruncPoly &other) {
  check_compatible(other);
  for (const auto &[m, c] : other.terms_)
    add_term(m, c);
  return *this;
}

TruncPoly TruncPoly::operator-(const TruncPoly &other) const {
  TruncPoly r(*this);
  r -= other;
  return r;
}

TruncPoly &TruncPoly::operator-=(const TruncPoly &other) {
  check_compatible(other);
  for (const auto &[m, c] : other.terms_)
    add_term(m, -c);
  return *this;
}

TruncPoly TruncPoly::operator-() const {
  TruncPoly r(num_vars_, cap_);
  for (const auto &[m, c] : terms_)
    r.terms_.emplace(m, -c);
  return r;
}

TruncPoly TruncPoly::operator*(const TruncPoly &other) const {
  check_compatible(other);
  TruncPoly r(num_vars_, cap_);
  for (const auto &[ma, ca] : terms_) {
    if (ma.total_degree() > cap_)
      continue;
    for (const auto &[mb, cb] : other.terms_) {
      if (ma.total_degree() + mb.total_degree() > cap_)
        continue;
      r.add_term(ma.times(mb), ca * cb);
    }
  }
  return r;
}

TruncPoly TruncPoly::operator*(const Rational &c) const {
  TruncPoly r(num_vars_, cap_);
  if (c == 0)
    return r;
  for (const auto &[m, cc] : terms_)
    r.terms_.emplace(m, cc * c);
  return r;
}

bool TruncPoly::operator==(const TruncPoly &other) const {
  return num_vars_ == other.num_vars_ && cap_ == other.cap_ &&
         terms_ == other.terms_;
}

TruncPoly TruncPoly::recapped(int new_cap) const {
  TruncPoly r(num_vars_, new_cap);
  for (const auto &[m, c] : terms_)
    r.add_term(m, c);
  return r;
}

TruncPoly TruncPoly::unit_inverse() const {
  Rational c0 = constant_term();
  if (c0 == 0)
    throw DomainError("unit_inverse: zero constant term");
  // f = c0(1 + n) with n nilpotent at the cap; invert the geometric way.
  TruncPoly n = *this * (Rational(1) / c0);
  n.add_term(Monomial::one(num_vars_), -1);
  TruncPoly result = TruncPoly::constant(num_vars_, cap_, 1);
  TruncPoly power = TruncPoly::constant(num_vars_, cap_, 1);
  for (int k = 1; k <= cap_ && !power.is_zero(); ++k) {
    power = power * n;
    result += power * Rational((k % 2 == 0) ? 1 : -1);
  }
  return result * (Rational(1) / c0);
}

TruncPoly TruncPoly::subst_zero(int i) const {
  if (i < 0 || i >= num_vars_)
    throw DomainError("subst_zero: variable index out of range");
  TruncPoly r(num_vars_, cap_);
  for (const auto &[m, c] : terms_)
    if (m.exponent(i) == 0)
      r.terms_.emplace(m, c);
  return r;
}

bool TruncPoly::depends_on(int i) const { return subst_zero(i) != *this; }

TruncPoly TruncPoly::homogeneous_part(int d) const {
  TruncPoly r(num_vars_, cap_);
  for (const auto &[m, c] : terms_)
    if (m.total_degree() == d)
      r.terms_.emplace(m, c);
  return r;
}

TruncPoly TruncPoly::exact_div_linear(const TruncPoly &linear) const {
  if (linear.num_vars() != num_vars_)
    throw DomainError("exact_div_linear: variable count mismatch");
  if (linear.is_zero() || linear.degree() != 1 ||
      linear.constant_term() != 0)
    throw DomainError("exact_div_linear: divisor is not a nonzero linear form");
  if (cap_ < 1)
    throw DomainError("exact_div_linear: cap too small");
  if (constant_term() != 0)
    throw DomainError("exact_div_linear: nonzero remainder in degree 0");

  // Pivot: the first variable present in the divisor; with graded-lex the
  // leading monomial of any multiple of the divisor is divisible by it.
  int pivot = -1;
  Rational lead;
  for (int i = 0; i < num_vars_; ++i) {
    Rational c = linear.coeff(Monomial::var(num_vars_, i));
    if (c != 0) {
      pivot = i;
      lead = c;
      break;
    }
  }

  TruncPoly q(num_vars_, cap_ - 1);
  for (int d = 1; d <= cap_; ++d) {
    TruncPoly rem = homogeneous_part(d);
    while (!rem.is_zero()) {
      const auto &[m, c] = *rem.terms().begin();
      if (m.exponent(pivot) == 0)
        throw DomainError("exact_div_linear: nonzero remainder in degree " +
                          std::to_string(d));
      Monomial qm = m.div_var(pivot);
      Rational qc = c / lead;
      q.add_term(qm, qc);
      for (const auto &[lm, lc] : linear.terms())
        rem.add_term(qm.times(lm), -qc * lc);
    }
  }
  return q;
}

std::string TruncPoly::str() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << '-';
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0)
        a = -a;
    }
    if (m.total_degree() == 0)
      os << to_string(a);
    else if (a == 1)
      os << m.str();
    else
      os << to_string(a) << '*' << m.str();
    first = false;
  }
  return os.str();
}

namespace {

TruncPoly power_series(const TruncPoly &f, bool shifted_factorial) {
  if (f.constant_term() != 0)
    throw DomainError("series argument must have zero constant term");
  TruncPoly result(f.num_vars(), f.cap());
  TruncPoly power = TruncPoly::constant(f.num_vars(), f.cap(), 1);
  for (int k = 0; k <= f.cap() && !power.is_zero(); ++k) {
    Rational denom = factorial(shifted_factorial ? k + 1 : k);
    result += power * (Rational(1) / denom);
    power = power * f;
  }
  return result;
}

} // namespace

TruncPoly exp_trunc(const TruncPoly &f) { return power_series(f, false); }

TruncPoly h_trunc(const TruncPoly &f) { return power_series(f, true); }

TruncPoly subst_bivariate(const TruncPoly &series, const TruncPoly &a,
                          const TruncPoly &b) {
  if (series.num_vars() != 2)
    throw DomainError("subst_bivariate: series must be bivariate");
  if (a.num_vars() != b.num_vars() || a.cap() != b.cap())
    throw DomainError("subst_bivariate: argument mismatch");
  TruncPoly result(a.num_vars(), a.cap());
  // Powers are cached per exponent actually used; the series is sparse.
  std::vector<TruncPoly> apow{TruncPoly::constant(a.num_vars(), a.cap(), 1)};
  std::vector<TruncPoly> bpow{TruncPoly::constant(a.num_vars(), a.cap(), 1)};
  for (const auto &[m, c] : series.terms()) {
    int i = m.exponent(0), j = m.exponent(1);
    while (static_cast<int>(apow.size()) <= i)
      apow.push_back(apow.back() * a);
    while (static_cast<int>(bpow.size()) <= j)
      bpow.push_back(bpow.back() * b);
    result += apow[static_cast<std::size_t>(i)] *
              bpow[static_cast<std::size_t>(j)] * c;
  }
  return result;
}

} // namespace metab
