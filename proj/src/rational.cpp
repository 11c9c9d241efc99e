#include "cyloops/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace cyloops {

namespace mp = boost::multiprecision;

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  // The sign goes on the numerator: boost::rational rejects negative
  // unbounded denominators.
  value_ = den < 0 ? mp::cpp_rational(-num, -den) : mp::cpp_rational(num, den);
}

BigInt Rational::numerator() const { return mp::numerator(value_); }
BigInt Rational::denominator() const { return mp::denominator(value_); }

Rational Rational::operator-() const { return Rational(mp::cpp_rational(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("Rational: zero to a negative power");
    return (Rational(1) / *this).pow(-exponent);
  }
  return Rational(mp::pow(numerator(), static_cast<unsigned>(exponent)),
                  mp::pow(denominator(), static_cast<unsigned>(exponent)));
}

Real Rational::to_real() const {
  return Real(numerator()) / Real(denominator());
}

double Rational::to_double() const { return static_cast<double>(to_real()); }

std::string Rational::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::string Rational::decimal(int digits) const { return format_real(to_real(), digits); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

std::string format_real(const Real& x, int digits) {
  // The stream is imbued with the classic locale so '.' is always the
  // decimal separator.
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(digits);
  os << x;
  return os.str();
}

}  // namespace cyloops
