#include "cyloops/closed_form.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <stdexcept>

#include "cyloops/pochhammer.hpp"

namespace cyloops {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::fsz_derivative: return "fsz_derivative";
    case Method::transfer_oracle: return "transfer_oracle";
    case Method::monte_carlo: return "monte_carlo";
  }
  return "unknown";
}

DensityRecord DensityRecord::make(int N, Rational nu_c, Rational nu_nc, Method method) {
  DensityRecord r;
  r.L = 2 * N;
  r.N = N;
  r.nu_c_float = nu_c.decimal();
  r.nu_nc_float = nu_nc.decimal();
  r.nu_c = std::move(nu_c);
  r.nu_nc = std::move(nu_nc);
  r.method = method;
  return r;
}

namespace {

void require_positive(int N, const char* who) {
  if (N < 1) throw std::invalid_argument(std::string(who) + ": N must be >= 1");
}

int minus_one_pow(int N) { return (N % 2 == 0) ? 1 : -1; }

// (5/6 - N/2)_N, squared in both densities.
Rational shifted_sixth_pochhammer(int N) {
  return pochhammer(Rational(5, 6) - Rational(N, 2), static_cast<unsigned>(N));
}

}  // namespace

Rational nu_c_exact(int N) {
  require_positive(N, "nu_c_exact");
  const auto n = static_cast<unsigned>(N);
  const Rational p = shifted_sixth_pochhammer(N);

  Rational first = Rational(2).pow(-2 * (N + 1)) * Rational(3).pow(2 - 3 * N) *
                   Rational(2 - minus_one_pow(N)) * Rational(factorial(3 * n - 1)) /
                   (Rational(factorial(n - 1)) * p * p);
  Rational second = Rational(3, 4) * pochhammer(Rational(N + 1, 2), n) / pochhammer(Rational(N, 2), n);
  return first + second - Rational(5, 2);
}

Rational nu_nc_exact(int N) {
  require_positive(N, "nu_nc_exact");
  const auto n = static_cast<unsigned>(N);
  const Rational p = shifted_sixth_pochhammer(N);
  const Rational half = pochhammer(Rational(N, 2), n);

  Rational prefactor = Rational(3) * Rational(2).pow(2 * (N - 1)) * Rational(factorial(n - 1)) /
                       (Rational(N) * Rational(factorial(3 * n - 1)));
  Rational bracket = Rational(3).pow(3 * N - 2) * Rational(2 + minus_one_pow(N)) * p * p - half * half;
  return prefactor * bracket;
}

Real nu_c_gamma_form(int N) {
  require_positive(N, "nu_c_gamma_form");
  using boost::math::tgamma;
  const Real n = N;
  const Real pi = boost::math::constants::pi<Real>();
  const Real sixth = Real(1) / 6;

  const Real first = 3 * tgamma(n / 2) * tgamma(3 * n / 2 + Real(1) / 2) /
                     (4 * tgamma(3 * n / 2) * tgamma((n + 1) / 2));
  const Real g1 = tgamma(n / 2 + sixth);
  const Real g5 = tgamma(n / 2 + 5 * sixth);
  const Real second = pi * pi * pow(Real(2), -2 * N) * pow(Real(3), 2 - 3 * N) * tgamma(3 * n) /
                      (g1 * g1 * g5 * g5 * tgamma(n));
  return first + second - Real(5) / 2;
}

Real nu_nc_gamma_form(int N) {
  require_positive(N, "nu_nc_gamma_form");
  using boost::math::tgamma;
  const Real n = N;
  const Real pi = boost::math::constants::pi<Real>();
  const Real sixth = Real(1) / 6;

  const Real g1 = tgamma(n / 2 + sixth);
  const Real g5 = tgamma(n / 2 + 5 * sixth);
  const Real g32 = tgamma(3 * n / 2);
  const Real gh = tgamma(n / 2);
  const Real prefactor = pow(Real(2), 2 * (N - 2)) * tgamma(n) / (n * pi * pi * tgamma(3 * n));
  const Real bracket = pow(Real(3), 3 * N) * g1 * g1 * g5 * g5 - 12 * pi * pi * g32 * g32 / (gh * gh);
  return prefactor * bracket;
}

namespace {

void require_order(int order) {
  if (order < 0 || order > 2) throw std::invalid_argument("asymptotic order must be 0, 1 or 2");
}

}  // namespace

Real nu_c_asymptotic(int N, int order) {
  require_positive(N, "nu_c_asymptotic");
  require_order(order);
  const Real sqrt3 = sqrt(Real(3));
  const Real inv_sq = 1 / (Real(2 * N) * Real(2 * N));
  Real s = (3 * sqrt3 - 5) / 2;
  if (order >= 1) s += inv_sq / (4 * sqrt3);
  if (order >= 2) s -= Real(23) / (48 * sqrt3) * inv_sq * inv_sq;
  return s;
}

Real nu_nc_asymptotic(int N, int order) {
  require_positive(N, "nu_nc_asymptotic");
  require_order(order);
  const Real sqrt3 = sqrt(Real(3));
  const Real inv_sq = 1 / (Real(2 * N) * Real(2 * N));
  Real s = inv_sq / sqrt3;
  if (order >= 1) s -= Real(17) / (18 * sqrt3) * inv_sq * inv_sq;
  if (order >= 2) s += Real(1021) / (216 * sqrt3) * inv_sq * inv_sq * inv_sq;
  return s;
}

int nu_c_residual_power(int order) {
  require_order(order);
  return 2 * (order + 1);
}

int nu_nc_residual_power(int order) {
  require_order(order);
  return 2 * (order + 2);
}

std::vector<DensityRecord> density_table(int N_max) {
  require_positive(N_max, "density_table");
  std::vector<DensityRecord> out;
  out.reserve(static_cast<std::size_t>(N_max));
  for (int N = 1; N <= N_max; ++N)
    out.push_back(DensityRecord::make(N, nu_c_exact(N), nu_nc_exact(N), Method::closed_form));
  return out;
}

}  // namespace cyloops
