#include "cyloops/cyclotomic.hpp"

#include <cmath>
#include <stdexcept>

namespace cyloops {

Rational Cyclotomic::real_part() const { return a_ + b_ / Rational(2); }

const Rational& Cyclotomic::as_rational() const {
  if (!is_rational()) throw std::domain_error("Cyclotomic: value is not rational: " + str());
  return a_;
}

Cyclotomic Cyclotomic::conj() const { return {a_ + b_, -b_}; }

Rational Cyclotomic::norm() const { return a_ * a_ + a_ * b_ + b_ * b_; }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
  const Rational n = norm();
  const Cyclotomic c = conj();
  return {c.a_ / n, c.b_ / n};
}

Cyclotomic Cyclotomic::pow(int exponent) const {
  Cyclotomic base = exponent < 0 ? inverse() : *this;
  unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  Cyclotomic result(1);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2,  w^2 = w - 1
  const Rational bd = b_ * o.b_;
  Rational a = a_ * o.a_ - bd;
  Rational b = a_ * o.b_ + b_ * o.a_ + bd;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

std::complex<double> Cyclotomic::to_complex() const {
  const double a = a_.to_double();
  const double b = b_.to_double();
  return {a + 0.5 * b, b * std::sqrt(3.0) / 2.0};
}

std::string Cyclotomic::str() const {
  if (is_rational()) return a_.str();
  return "(" + a_.str() + (b_.sign() < 0 ? " - " : " + ") + (b_.sign() < 0 ? (-b_).str() : b_.str()) +
         "*w)";
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.str(); }

}  // namespace cyloops
