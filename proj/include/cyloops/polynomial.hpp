#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyloops/cyclotomic.hpp"

namespace cyloops {

/// Dense polynomial over Q(w), coefficients lowest degree first, with no
/// trailing zeros. The zero polynomial has no coefficients and degree -1.
class CycPolynomial {
 public:
  CycPolynomial() = default;
  explicit CycPolynomial(std::vector<Cyclotomic> coefficients);
  CycPolynomial(std::initializer_list<Cyclotomic> coefficients)
      : CycPolynomial(std::vector<Cyclotomic>(coefficients)) {}

  /// c * x^k.
  static CycPolynomial monomial(const Cyclotomic& c, std::size_t k);
  /// (1 + x)^n.
  static CycPolynomial one_plus_x_pow(unsigned n);
  /// (1 - x)^n.
  static CycPolynomial one_minus_x_pow(unsigned n);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Cyclotomic>& coefficients() const { return coeffs_; }
  /// Coefficient of x^k (zero beyond the degree).
  Cyclotomic coefficient(std::size_t k) const;

  /// True when every coefficient lies in Q.
  bool has_rational_coefficients() const;

  Cyclotomic evaluate(const Cyclotomic& x) const { return evaluate_in<Cyclotomic>(x); }

  /// Horner evaluation in any ring constructible from a Cyclotomic
  /// coefficient (e.g. dual numbers for forward differentiation).
  template <class Ring>
  Ring evaluate_in(const Ring& x) const {
    Ring acc{Cyclotomic{}};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Ring{*it};
    return acc;
  }

  CycPolynomial derivative() const;

  /// p(s*x): coefficient k is multiplied by s^k.
  CycPolynomial scale_arg(const Cyclotomic& s) const;

  CycPolynomial operator-() const;
  CycPolynomial& operator+=(const CycPolynomial& o);
  CycPolynomial& operator-=(const CycPolynomial& o);
  CycPolynomial& operator*=(const CycPolynomial& o);
  CycPolynomial& operator*=(const Cyclotomic& c);

  friend CycPolynomial operator+(CycPolynomial p, const CycPolynomial& r) { return p += r; }
  friend CycPolynomial operator-(CycPolynomial p, const CycPolynomial& r) { return p -= r; }
  friend CycPolynomial operator*(CycPolynomial p, const CycPolynomial& r) { return p *= r; }
  friend CycPolynomial operator*(CycPolynomial p, const Cyclotomic& c) { return p *= c; }
  friend CycPolynomial operator*(const Cyclotomic& c, CycPolynomial p) { return p *= c; }
  friend bool operator==(const CycPolynomial& p, const CycPolynomial& r) = default;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Cyclotomic> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycPolynomial& p);

/// Thrown by poly_divide_exact when the remainder is nonzero.
class NotDivisible : public std::runtime_error {
 public:
  explicit NotDivisible(CycPolynomial remainder);
  const CycPolynomial& remainder() const noexcept { return remainder_; }

 private:
  CycPolynomial remainder_;
};

CycPolynomial poly_scale_arg(const CycPolynomial& p, const Cyclotomic& s);

/// Quotient num/den; throws NotDivisible carrying the remainder otherwise,
/// std::domain_error for a zero divisor.
CycPolynomial poly_divide_exact(const CycPolynomial& num, const CycPolynomial& den);

}  // namespace cyloops
