#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <string>

#include "cyloops/errors.hpp"
#include "cyloops/fsz.hpp"

namespace cyloops {

namespace {

Complex to_complex(const Cyclotomic& c) {
  const Real a = c.a().to_real();
  const Real b = c.b().to_real();
  return Complex(a + b / 2, b * sqrt(Real(3)) / 2);
}

struct PolyEval {
  Complex value;
  Complex slope;
};

PolyEval horner(const std::vector<Complex>& coeffs, const Complex& z) {
  Complex p = 0;
  Complex dp = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

}  // namespace

std::vector<Complex> bethe_roots(const FszSolution& sol) {
  std::vector<Complex> coeffs;
  for (const auto& c : sol.Q.coefficients()) coeffs.push_back(to_complex(c));
  const std::size_t n = coeffs.size() - 1;
  if (n == 0) return {};

  // Starting points on a circle of the mean root modulus, rotated off the
  // real axis so no two start symmetric to each other.
  const Real radius = pow(abs(coeffs.front() / coeffs.back()), Real(1) / Real(n));
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Real angle = two_pi * Real(k) / Real(n) + Real(0.4);
    z[k] = Complex(radius * cos(angle), radius * sin(angle));
  }

  const Real tolerance("1e-30");
  constexpr int max_iterations = 2000;
  std::vector<Real> step(n);
  for (int it = 0; it < max_iterations; ++it) {
    Real worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      // Full polynomial at every candidate; nothing is deflated out.
      const PolyEval pe = horner(coeffs, z[k]);
      if (pe.value == Complex(0)) {
        step[k] = 0;
        continue;
      }
      const Complex newton = pe.value / pe.slope;
      Complex repulsion = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) repulsion += Complex(1) / (z[k] - z[j]);
      const Complex delta = newton / (Complex(1) - newton * repulsion);
      z[k] -= delta;
      const Real scale = std::max(Real(1), Real(abs(z[k])));
      step[k] = abs(delta) / scale;
      worst = std::max(worst, step[k]);
    }
    if (worst < tolerance) return z;
  }
  const auto bad = static_cast<std::size_t>(std::max_element(step.begin(), step.end()) - step.begin());
  throw RootFindingError("bethe_roots: Aberth iteration did not converge for N = " + std::to_string(sol.N) +
                             " (root " + std::to_string(bad) + ")",
                         bad);
}

double bethe_residual(const FszSolution& sol) {
  const std::vector<Complex> roots = bethe_roots(sol);
  const int L = 2 * sol.N;
  const int M = sol.N;
  const Complex q = to_complex(stochastic_q());
  const Complex q2 = q * q;
  const Complex e2iphi = q2;  // exp(2i phi) with phi = pi/3
  const Complex sign = ((M - 1) % 2 == 0) ? Complex(1) : Complex(-1);

  Real worst = 0;
  for (const Complex& ui : roots) {
    const Complex z = (ui - q) / (Complex(1) - q * ui);
    Complex lhs = e2iphi;
    for (int k = 0; k < L; ++k) lhs *= z;
    Complex rhs = sign;
    for (const Complex& uj : roots) rhs *= (q2 * uj - ui) / (q2 * ui - uj);
    worst = std::max(worst, Real(abs(lhs - rhs)));
  }
  return static_cast<double>(worst);
}

}  // namespace cyloops
