#include "cyloops/fsz.hpp"

#include <stdexcept>

#include "cyloops/errors.hpp"
#include "cyloops/hypergeometric.hpp"
#include "cyloops/pochhammer.hpp"

namespace cyloops {

namespace {

// sum_k c_k (-x^3)^k * x^shift for the series 2F1(a, b; c; t) at t = -x^3.
CycPolynomial cubic_series(const Rational& a, const Rational& b, const Rational& c, std::size_t shift) {
  const auto coeffs = hyp2f1_coefficients(a, b, c);
  std::vector<Cyclotomic> v(3 * (coeffs.size() - 1) + shift + 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    v[3 * k + shift] = Cyclotomic(k % 2 == 0 ? coeffs[k] : -coeffs[k]);
  return CycPolynomial(std::move(v));
}

}  // namespace

FszSolution build_fsz(int N) {
  if (N < 1) throw std::invalid_argument("build_fsz: N must be >= 1");
  const Rational n(N);
  const Rational third(1, 3);
  const Rational two_thirds(2, 3);

  // f_Q = G(2/3)/G(2/3-N) [ G(2/3)/G(2/3+N) F(1/3-N,-N;1/3)
  //                        + x^2 N G(-2/3)/G(1/3+N) F(2/3-N,1-N;5/3) ]
  const Rational q_outer = gamma_ratio(two_thirds - n, N);
  const Rational q_first = Rational(1) / gamma_ratio(two_thirds, N);
  const Rational q_second = n / gamma_ratio(Rational(-2, 3), N + 1);
  CycPolynomial f_Q = cubic_series(third - n, -n, third, 0) * Cyclotomic(q_first);
  f_Q +=cubic_series(two_thirds - n, Rational(1) - n, Rational(5, 3), 2) * Cyclotomic(q_second);
  f_Q *= Cyclotomic(q_outer);

  // f_P = G(2/3+N)/G(2/3) [ G(2/3-N)/G(2/3) F(2/3-N,-N;2/3)
  //                        + x N G(1/3-N)/G(4/3) F(1/3-N,1-N;4/3) ]
  const Rational p_outer = gamma_ratio(two_thirds, N);
  const Rational p_first = Rational(1) / gamma_ratio(two_thirds - n, N);
  const Rational p_second = n / gamma_ratio(third - n, N + 1);
  CycPolynomial f_P = cubic_series(two_thirds - n, -n, two_thirds, 0) * Cyclotomic(p_first);
  f_P += cubic_series(third - n, Rational(1) - n, Rational(4, 3), 1) * Cyclotomic(p_second);
  f_P *= Cyclotomic(p_outer);

  FszSolution sol;
  sol.N = N;
  sol.T = CycPolynomial::one_plus_x_pow(static_cast<unsigned>(2 * N));
  sol.Q = poly_divide_exact(f_Q, sol.T);
  sol.P = poly_divide_exact(f_P, sol.T);
  sol.f_Q = std::move(f_Q);
  sol.f_P = std::move(f_P);
  if (sol.Q.degree() != N || sol.P.degree() != N)
    throw InconsistencyError("build_fsz: Q or P does not have degree N = " + std::to_string(N));
  return sol;
}

namespace {

// (pi/sqrt3) / (Gamma(z) Gamma(1-z)) = sin(pi z)/sqrt3 for z = k + 1/3 or
// k + 2/3, which is (-1)^k / 2.
Rational scaled_reflection(const Rational& z) {
  const BigInt k = z.numerator() >= 0 ? BigInt(z.numerator() / z.denominator())
                                      : BigInt((z.numerator() - z.denominator() + 1) / z.denominator());
  const Rational frac = z - Rational(k);
  if (frac != Rational(1, 3) && frac != Rational(2, 3))
    throw std::invalid_argument("scaled_reflection: fractional part must be 1/3 or 2/3");
  return Rational(k % 2 == 0 ? 1 : -1, 2);
}

// Gamma(a - N/2) / Gamma(a + N/2)
Rational half_shift_ratio(const Rational& a, int N) { return gamma_ratio(a + Rational(N, 2), -N); }

}  // namespace

ClosedEval fq_fp_closed_eval(int N, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("fq_fp_closed_eval: sign must be +1 or -1");
  const FszSolution sol = build_fsz(N);
  const Rational n(N);
  const Cyclotomic x = stochastic_q().pow(2 * sign);
  const Cyclotomic x_inv = stochastic_q().pow(-2 * sign);

  const Rational r16 = half_shift_ratio(Rational(1, 6), N);
  const Rational r23 = half_shift_ratio(Rational(2, 3), N);
  const Rational r13 = half_shift_ratio(Rational(1, 3), N);
  const Rational r56 = half_shift_ratio(Rational(5, 6), N);

  // The brackets coming from the n = +1 contiguous formula carry the
  // alternating sign; those from n = -1 do not.
  ClosedEval out;
  out.f_Q = Cyclotomic(gamma_ratio(Rational(2, 3) - n, N)) *
            (Cyclotomic(scaled_reflection(Rational(2, 3) + n) * (r16 + r23)) -
             x_inv * Cyclotomic(scaled_reflection(Rational(1, 3) + n) * (r13 - r56)));
  out.f_P = Cyclotomic(gamma_ratio(Rational(2, 3), N) / Rational(2)) *
            (Cyclotomic(r13 + r56) + x * Cyclotomic(r16 - r23));

  if (out.f_Q != sol.f_Q.evaluate(x) || out.f_P != sol.f_P.evaluate(x)) {
    throw MismatchError("fq_fp_closed_eval: closed form disagrees with polynomial value at N = " +
                        std::to_string(N) + ", sign = " + std::to_string(sign));
  }
  return out;
}

}  // namespace cyloops
