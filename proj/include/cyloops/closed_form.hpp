#pragma once

// Exact loop densities of the O(1) dense loop model on a cylinder of even
// circumference L = 2N, their gamma-function forms, and large-N series.

#include <string>
#include <string_view>
#include <vector>

#include "cyloops/rational.hpp"

namespace cyloops {

enum class Method { closed_form, fsz_derivative, transfer_oracle, monte_carlo };

std::string_view to_string(Method m);

/// One row of output: the densities of contractible (nu_c) and
/// non-contractible (nu_nc) loops per lattice site at circumference L.
struct DensityRecord {
  int L = 0;
  int N = 0;
  Rational nu_c;
  Rational nu_nc;
  std::string nu_c_float;
  std::string nu_nc_float;
  Method method = Method::closed_form;

  static DensityRecord make(int N, Rational nu_c, Rational nu_nc, Method method);
};

/// Contractible-loop density at L = 2N, N >= 1 (throws std::invalid_argument otherwise).
Rational nu_c_exact(int N);

/// Non-contractible-loop density at L = 2N, N >= 1.
Rational nu_nc_exact(int N);

/// Gamma-function forms of the same densities, evaluated in 50-digit
/// floating point. Independent of the rational path; used as a cross-check.
Real nu_c_gamma_form(int N);
Real nu_nc_gamma_form(int N);

/// Partial sums of the large-N expansions in powers of (2N)^-2.
/// order in {0, 1, 2}.
Real nu_c_asymptotic(int N, int order);
Real nu_nc_asymptotic(int N, int order);

/// Power p such that (2N)^p * |exact - order-k series| tends to the first
/// omitted coefficient: 2(k+1) for nu_c, 2(k+2) for nu_nc (whose series
/// starts at (2N)^-2).
int nu_c_residual_power(int order);
int nu_nc_residual_power(int order);

/// Records for N = 1..N_max, method = closed_form.
std::vector<DensityRecord> density_table(int N_max);

}  // namespace cyloops
