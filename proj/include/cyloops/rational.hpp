#pragma once

// Exact rational numbers over arbitrary-precision integers, plus the
// high-precision floating type used wherever a float rendering or a
// numerical cross-check is needed.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace cyloops {

using BigInt = boost::multiprecision::cpp_int;

/// 50 significant decimal digits (~166 bits of mantissa).
using Real = boost::multiprecision::cpp_bin_float_50;

/// Exact fraction, always in lowest terms with a positive denominator.
/// Division by zero throws std::domain_error.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Integer power; negative exponents invert (zero base throws).
  Rational pow(int exponent) const;

  /// Nearest-float conversion, done once from the exact value.
  Real to_real() const;
  double to_double() const;

  /// "num/den", or just "num" for integers.
  std::string str() const;

  /// Decimal rendering with the given number of significant digits.
  std::string decimal(int digits = 20) const;

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
  boost::multiprecision::cpp_rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt factorial(unsigned n);

/// Decimal rendering of a Real with `digits` significant digits.
std::string format_real(const Real& x, int digits = 20);

}  // namespace cyloops
