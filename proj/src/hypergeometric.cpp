#include "cyloops/hypergeometric.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <stdexcept>

#include "cyloops/errors.hpp"
#include "cyloops/pochhammer.hpp"

namespace cyloops {

namespace {

unsigned terminating_length(const Rational& b) {
  if (!is_nonpositive_integer(b))
    throw std::invalid_argument("terminating 2F1 needs b a nonpositive integer, got " + b.str());
  return static_cast<unsigned>(-b.numerator());
}

}  // namespace

std::vector<Rational> hyp2f1_coefficients(const Rational& a, const Rational& b, const Rational& c) {
  const unsigned m = terminating_length(b);
  std::vector<Rational> out;
  out.reserve(m + 1);
  Rational term(1);
  out.push_back(term);
  for (unsigned k = 0; k < m; ++k) {
    const Rational ck = c + Rational(k);
    if (ck.is_zero()) throw PoleError("2F1: (c)_k vanishes before termination, c = " + c.str());
    term *= (a + Rational(k)) * (b + Rational(k)) / (ck * Rational(k + 1));
    out.push_back(term);
  }
  return out;
}

Cyclotomic hyp2f1_terminating(const Rational& a, const Rational& b, const Rational& c, const Cyclotomic& t) {
  const auto coeffs = hyp2f1_coefficients(a, b, c);
  Cyclotomic acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + Cyclotomic(*it);
  return acc;
}

namespace {

void require_shift(int n) {
  if (n < -2 || n > 2) throw std::invalid_argument("Kummer shift n must lie in [-2, 2]");
}

std::int64_t binom(int n, int k) {
  std::int64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
  return r;
}

}  // namespace

Rational kummer_contiguous(const Rational& a, const Rational& b, int n) {
  require_shift(n);
  const int minus_b = static_cast<int>(terminating_length(b));
  const int m = n < 0 ? -n : n;
  const Rational half_a = a / Rational(2);

  if (n >= 0) {
    // Gamma(1+a-b+n)Gamma(1-b) / (2 Gamma(a) Gamma(1-b+n))
    //   * sum_k (-1)^k C(n,k) Gamma(a/2+k/2) / Gamma(a/2+k/2-b+1)
    const Rational prefactor =
        gamma_ratio(a, 1 + minus_b + n) / gamma_ratio(Rational(1 + minus_b), n) / Rational(2);
    Rational sum;
    for (int k = 0; k <= m; ++k) {
      const Rational term = Rational(binom(m, k)) / gamma_ratio(half_a + Rational(k, 2), 1 + minus_b);
      sum += (k % 2 == 0) ? term : -term;
    }
    return prefactor * sum;
  }
  // Gamma(1+a-b-m) / (2 Gamma(a)) * sum_k C(m,k) Gamma(a/2+k/2) / Gamma(a/2+k/2-b+1-m);
  // the Gamma(1-b-m) factors of numerator and denominator cancel.
  const Rational prefactor = gamma_ratio(a, 1 + minus_b - m) / Rational(2);
  Rational sum;
  for (int k = 0; k <= m; ++k)
    sum += Rational(binom(m, k)) / gamma_ratio(half_a + Rational(k, 2), 1 + minus_b - m);
  return prefactor * sum;
}

namespace {

Real checked_tgamma(const Real& x) {
  if (x <= 0 && x == floor(x)) throw PoleError("Gamma pole at " + format_real(x, 10));
  return boost::math::tgamma(x);
}

}  // namespace

Real kummer_contiguous_numeric(const Real& a, const Real& b, int n) {
  require_shift(n);
  const int m = n < 0 ? -n : n;
  Real sum = 0;
  if (n >= 0) {
    for (int k = 0; k <= m; ++k) {
      const Real x = a / 2 + Real(k) / 2;
      const Real term = Real(binom(m, k)) * checked_tgamma(x) / checked_tgamma(x - b + 1);
      sum += (k % 2 == 0) ? term : Real(-term);
    }
    return checked_tgamma(1 + a - b + n) * checked_tgamma(1 - b) /
           (2 * checked_tgamma(a) * checked_tgamma(1 - b + n)) * sum;
  }
  for (int k = 0; k <= m; ++k) {
    const Real x = a / 2 + Real(k) / 2;
    sum += Real(binom(m, k)) * checked_tgamma(x) / checked_tgamma(x - b + 1 - m);
  }
  return checked_tgamma(1 + a - b - m) / (2 * checked_tgamma(a)) * sum;
}

std::vector<KummerCase> kummer_sweep(int N, double tol) {
  if (N < 1) throw std::invalid_argument("kummer_sweep: N must be >= 1");
  const Rational third(1, 3);
  const Rational two_thirds(2, 3);
  const Rational n(N);
  // (a, b) of the four series in f_Q and f_P, then of their t-derivatives
  // (a+1, b+1).
  const std::vector<std::pair<Rational, Rational>> base = {
      {third - n, -n}, {two_thirds - n, Rational(1) - n},  // f_Q
      {two_thirds - n, -n}, {third - n, Rational(1) - n},  // f_P
  };
  std::vector<std::pair<Rational, Rational>> families;
  for (const auto& [a, b] : base) {
    for (int d = 0; d <= 1; ++d) {
      std::pair<Rational, Rational> p{a + Rational(d), b + Rational(d)};
      if (!is_nonpositive_integer(p.second)) continue;
      bool seen = false;
      for (const auto& f : families) seen = seen || f == p;
      if (!seen) families.push_back(std::move(p));
    }
  }

  std::vector<KummerCase> out;
  for (const auto& [a, b] : families) {
    for (int shift = -2; shift <= 2; ++shift) {
      KummerCase kc;
      kc.a = a;
      kc.b = b;
      kc.n = shift;
      const Rational c = Rational(1) + a - b + Rational(shift);
      kc.series = hyp2f1_terminating(a, b, c, Cyclotomic(-1)).as_rational();
      kc.gamma_exact = kummer_contiguous(a, b, shift);
      kc.gamma_numeric = kummer_contiguous_numeric(a.to_real(), b.to_real(), shift);
      kc.exact_match = kc.gamma_exact == kc.series;
      const Real ref = kc.series.to_real();
      const Real scale = abs(ref) > 1 ? Real(abs(ref)) : Real(1);
      kc.numeric_match = abs(kc.gamma_numeric - ref) <= Real(tol) * scale;
      out.push_back(std::move(kc));
    }
  }
  return out;
}

}  // namespace cyloops
