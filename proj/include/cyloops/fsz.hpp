#pragma once

// The explicit solution of the T-Q and T-P equations at the stochastic point
// (q = exp(i*pi/3), phi = pi/3) in the largest-eigenvalue sector M = N, and
// the derivative machinery that turns it into loop densities.

#include <boost/multiprecision/cpp_complex.hpp>

#include <vector>

#include "cyloops/polynomial.hpp"
#include "cyloops/rational.hpp"

namespace cyloops {

/// f_Q, f_P are built from terminating 2F1 series in t = -x^3;
/// Q = f_Q / (1+x)^{2N}, P = f_P / (1+x)^{2N} are exact quotients of degree N;
/// T = (1+x)^{2N}.
struct FszSolution {
  int N = 0;
  CycPolynomial f_Q;
  CycPolynomial f_P;
  CycPolynomial Q;
  CycPolynomial P;
  CycPolynomial T;
};

/// Throws NotDivisible if (1+x)^{2N} fails to divide f_Q or f_P, and
/// InconsistencyError if the quotient degrees are not N.
FszSolution build_fsz(int N);

// --- derivatives -----------------------------------------------------------

/// Explicit q-derivative coefficient A in its Q,P form:
/// [q Q'(q^-2)P(q^2) - Q'(q^2)P(q^-2) - q^-1 Q(q^2)P'(q^-2) - q^-1 Q(q^-2)P'(q^2)] / (q - q^-1).
Cyclotomic quantity_A_qp_form(const FszSolution& sol);

/// Independent route: forward-mode derivative of the T(1) numerator in the
/// explicit q of the arguments Q(q^{+-2}u), P(q^{+-2}u) with Bethe roots and
/// exp(i*phi) frozen, halved (the exponent 2 of q^{+-2}).
Cyclotomic quantity_A_frozen_root(const FszSolution& sol);

/// The f_Q, f_P form of A written out with the -2N{...} correction block.
Cyclotomic quantity_A_f_form(const FszSolution& sol);

struct ARoutes {
  Cyclotomic qp_form;
  Cyclotomic frozen_root;
  Cyclotomic f_form;
  bool f_form_matches = false;
};

/// All three routes. Never throws on disagreement.
ARoutes quantity_A_routes(const FszSolution& sol);

/// The Q,P form, checked against the frozen-root route after assembly into
/// nu_c; throws InconsistencyError if they differ.
Cyclotomic quantity_A(const FszSolution& sol);

/// C = q^2 Q(q^2)P(q^-2) + q^-2 Q(q^-2)P(q^2); throws InconsistencyError if
/// the f_Q, f_P form disagrees.
Cyclotomic quantity_C(const FszSolution& sol);

struct DerivativeBundle {
  int N = 0;
  Cyclotomic A;
  Cyclotomic C;
  /// d ln T(1) / dq = 3 * 2^{-2N} * A.
  Cyclotomic dlnT_dq;
  /// d ln T(1) / dphi divided by sqrt(3), i.e. C / 2^{2N}; sqrt(3) itself is
  /// not an element of Q(w).
  Rational dlnT_dphi_over_sqrt3;
  Rational nu_c;
  Rational nu_nc;
};

/// Assembles nu_c = 1/2 + (1 - q^-2)^-1 / (2N) * dlnT/dq and
/// nu_nc = -C / (2N * 2^{2N}). Throws InconsistencyError if either has a
/// nonzero w-component and MismatchError if it differs from the closed form.
DerivativeBundle densities_via_tq(int N);
DerivativeBundle densities_via_tq(const FszSolution& sol);

// --- closed evaluations at x = q^{+-2} -------------------------------------

struct ClosedEval {
  Cyclotomic f_Q;
  Cyclotomic f_P;
};

/// f_Q(q^{2 sign}), f_P(q^{2 sign}) from their gamma-ratio closed forms
/// (reflection pairs reduced to (-1)^N / 2), asserted equal to the direct
/// polynomial values. sign must be +1 or -1; throws MismatchError otherwise
/// on disagreement.
ClosedEval fq_fp_closed_eval(int N, int sign);

// --- Bethe roots -----------------------------------------------------------

using Complex = boost::multiprecision::cpp_complex_50;

/// The N roots of Q, found simultaneously (Aberth iteration, no deflation)
/// at 50 significant digits. Throws RootFindingError on non-convergence.
std::vector<Complex> bethe_roots(const FszSolution& sol);

/// max_i | e^{2i phi} ((u_i - q)/(1 - q u_i))^L - (-1)^{M-1} prod_j (q^2 u_j - u_i)/(q^2 u_i - u_j) |
/// at the stochastic point with M = N, L = 2N.
double bethe_residual(const FszSolution& sol);

}  // namespace cyloops
