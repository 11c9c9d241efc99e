#pragma once

// Terminating Gauss hypergeometric series and the Kummer-type gamma-ratio
// evaluations of 2F1(a, b, 1+a-b+n; -1).

#include <string>
#include <vector>

#include "cyloops/cyclotomic.hpp"
#include "cyloops/rational.hpp"

namespace cyloops {

/// Coefficients (a)_k (b)_k / ((c)_k k!) for k = 0..-b.
/// b must be a nonpositive integer; throws PoleError if (c)_k vanishes
/// before the series terminates.
std::vector<Rational> hyp2f1_coefficients(const Rational& a, const Rational& b, const Rational& c);

/// Exact value of the terminating series 2F1(a, b; c; t).
Cyclotomic hyp2f1_terminating(const Rational& a, const Rational& b, const Rational& c, const Cyclotomic& t);

/// 2F1(a, b, 1+a-b+n; -1) for n in [-2, 2] via the contiguous Kummer
/// formulas (n >= 0: alternating sum over k = 0..n; n < 0: plain sum over
/// k = 0..|n|). Exact: b must be a nonpositive integer so every gamma ratio
/// collapses to a Pochhammer ratio. Throws PoleError at gamma poles.
Rational kummer_contiguous(const Rational& a, const Rational& b, int n);

/// The same gamma form evaluated with 50-digit gamma functions, for
/// arbitrary real a, b.
Real kummer_contiguous_numeric(const Real& a, const Real& b, int n);

struct KummerCase {
  Rational a;
  Rational b;
  int n = 0;
  Rational series;       // terminating series at t = -1
  Rational gamma_exact;  // kummer_contiguous
  Real gamma_numeric;    // kummer_contiguous_numeric
  bool exact_match = false;
  bool numeric_match = false;
};

/// Every (a, b) pair whose series appears in f_Q, f_P or their first
/// derivatives at the given N (terminating ones only), each evaluated for
/// n = -2..2 by series, exact gamma form and numeric gamma form.
/// numeric_match uses |gamma_numeric - series| <= tol * max(1, |series|).
std::vector<KummerCase> kummer_sweep(int N, double tol = 1e-12);

}  // namespace cyloops
