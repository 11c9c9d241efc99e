#include "cyloops/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace cyloops {

CycPolynomial::CycPolynomial(std::vector<Cyclotomic> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void CycPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CycPolynomial CycPolynomial::monomial(const Cyclotomic& c, std::size_t k) {
  std::vector<Cyclotomic> v(k + 1);
  v[k] = c;
  return CycPolynomial(std::move(v));
}

namespace {

CycPolynomial binomial_expansion(unsigned n, int sign) {
  std::vector<Cyclotomic> v;
  v.reserve(n + 1);
  BigInt c = 1;
  for (unsigned k = 0; k <= n; ++k) {
    v.emplace_back(Rational((sign < 0 && (k % 2 == 1)) ? BigInt(-c) : c));
    c = c * (n - k) / (k + 1);
  }
  return CycPolynomial(std::move(v));
}

}  // namespace

CycPolynomial CycPolynomial::one_plus_x_pow(unsigned n) { return binomial_expansion(n, +1); }
CycPolynomial CycPolynomial::one_minus_x_pow(unsigned n) { return binomial_expansion(n, -1); }

Cyclotomic CycPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Cyclotomic{};
}

bool CycPolynomial::has_rational_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Cyclotomic& c) { return c.is_rational(); });
}

CycPolynomial CycPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Cyclotomic> d;
  d.reserve(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d.push_back(coeffs_[k] * Cyclotomic(static_cast<std::int64_t>(k)));
  return CycPolynomial(std::move(d));
}

CycPolynomial CycPolynomial::scale_arg(const Cyclotomic& s) const {
  std::vector<Cyclotomic> v = coeffs_;
  Cyclotomic power(1);
  for (auto& c : v) {
    c *= power;
    power *= s;
  }
  return CycPolynomial(std::move(v));
}

CycPolynomial CycPolynomial::operator-() const {
  std::vector<Cyclotomic> v = coeffs_;
  for (auto& c : v) c = -c;
  return CycPolynomial(std::move(v));
}

CycPolynomial& CycPolynomial::operator+=(const CycPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

CycPolynomial& CycPolynomial::operator-=(const CycPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

CycPolynomial& CycPolynomial::operator*=(const CycPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Cyclotomic> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

CycPolynomial& CycPolynomial::operator*=(const Cyclotomic& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

std::string CycPolynomial::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[k];
    if (k >= 1) os << "*" << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycPolynomial& p) { return os << p.str(); }

NotDivisible::NotDivisible(CycPolynomial remainder)
    : std::runtime_error("polynomial division leaves remainder " + remainder.str()),
      remainder_(std::move(remainder)) {}

CycPolynomial poly_scale_arg(const CycPolynomial& p, const Cyclotomic& s) { return p.scale_arg(s); }

CycPolynomial poly_divide_exact(const CycPolynomial& num, const CycPolynomial& den) {
  if (den.is_zero()) throw std::domain_error("poly_divide_exact: zero divisor");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree()) throw NotDivisible(num);

  std::vector<Cyclotomic> rem = num.coefficients();
  const auto& d = den.coefficients();
  const std::size_t dn = d.size();
  const Cyclotomic lead_inv = d.back().inverse();
  std::vector<Cyclotomic> quot(rem.size() - dn + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Cyclotomic c = rem[k + dn - 1] * lead_inv;
    if (!c.is_zero()) {
      for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= c * d[j];
    }
    quot[k] = std::move(c);
  }
  CycPolynomial remainder(std::move(rem));
  if (!remainder.is_zero()) throw NotDivisible(std::move(remainder));
  return CycPolynomial(std::move(quot));
}

}  // namespace cyloops
