#pragma once

#include <complex>
#include <ostream>
#include <string>

#include "cyloops/rational.hpp"

namespace cyloops {

/// Element a + b*w of Q(w), w = exp(i*pi/3) a primitive sixth root of unity.
///
/// Products are reduced with w^2 = w - 1, so every element has a unique
/// two-component form. Complex conjugation is the field automorphism
/// w -> w^{-1} = 1 - w. At the stochastic point q = exp(i*pi/3) = w, and
/// i*sqrt(3) = q - 1/q = 2w - 1.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(std::int64_t a) : a_(a) {}          // NOLINT(google-explicit-constructor)
  Cyclotomic(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Cyclotomic omega() { return {Rational(0), Rational(1)}; }
  /// i*sqrt(3) = 2w - 1.
  static Cyclotomic i_sqrt3() { return {Rational(-1), Rational(2)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  /// a + b/2.
  Rational real_part() const;
  /// Imaginary part divided by sqrt(3)/2, i.e. b: Im(x) = b*sqrt(3)/2.
  const Rational& imag_over_half_sqrt3() const { return b_; }

  /// Returns the rational value; throws std::domain_error unless b == 0.
  const Rational& as_rational() const;

  Cyclotomic conj() const;
  /// x * conj(x) = a^2 + a*b + b^2.
  Rational norm() const;
  Cyclotomic inverse() const;
  Cyclotomic pow(int exponent) const;

  Cyclotomic operator-() const { return {-a_, -b_}; }
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic x, const Cyclotomic& y) { return x += y; }
  friend Cyclotomic operator-(Cyclotomic x, const Cyclotomic& y) { return x -= y; }
  friend Cyclotomic operator*(Cyclotomic x, const Cyclotomic& y) { return x *= y; }
  friend Cyclotomic operator/(Cyclotomic x, const Cyclotomic& y) { return x /= y; }
  friend bool operator==(const Cyclotomic& x, const Cyclotomic& y) = default;

  std::complex<double> to_complex() const;
  std::string str() const;

 private:
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

/// The deformation parameter q = exp(i*pi/3) of the stochastic point; also
/// equal to exp(i*phi) there.
inline Cyclotomic stochastic_q() { return Cyclotomic::omega(); }

}  // namespace cyloops
