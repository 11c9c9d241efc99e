#include <string>

#include "cyloops/closed_form.hpp"
#include "cyloops/errors.hpp"
#include "cyloops/fsz.hpp"

namespace cyloops {

namespace {

// Here exp(i*phi) = q and q^3 = -1, so q^{+-2} are the points where the
// Wronskian and T(1) are probed.
struct StochasticPoint {
  Cyclotomic q = stochastic_q();
  Cyclotomic q_inv = q.inverse();
  Cyclotomic q2 = q.pow(2);
  Cyclotomic qm2 = q.pow(-2);
  Cyclotomic i_sqrt3 = Cyclotomic::i_sqrt3();  // q - 1/q
};

// First-order dual numbers over Q(w): value + eps * slope, eps^2 = 0.
struct Dual {
  Cyclotomic value;
  Cyclotomic slope;

  Dual() = default;
  Dual(Cyclotomic v) : value(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Dual(Cyclotomic v, Cyclotomic s) : value(std::move(v)), slope(std::move(s)) {}

  friend Dual operator+(const Dual& x, const Dual& y) { return {x.value + y.value, x.slope + y.slope}; }
  friend Dual operator-(const Dual& x, const Dual& y) { return {x.value - y.value, x.slope - y.slope}; }
  friend Dual operator*(const Dual& x, const Dual& y) {
    return {x.value * y.value, x.value * y.slope + x.slope * y.value};
  }
  Dual inverse() const {
    const Cyclotomic inv = value.inverse();
    return {inv, -slope * inv * inv};
  }
};

// nu_c from A: 1/2 + (1 - q^-2)^-1 / (2N) * 3 * 2^{-2N} * A.
Cyclotomic assemble_nu_c(int N, const Cyclotomic& A) {
  const StochasticPoint sp;
  const Cyclotomic dlnT_dq = Cyclotomic(Rational(3) * Rational(2).pow(-2 * N)) * A;
  return Cyclotomic(Rational(1, 2)) + (Cyclotomic(1) - sp.qm2).inverse() * Cyclotomic(Rational(1, 2 * N)) * dlnT_dq;
}

}  // namespace

Cyclotomic quantity_A_qp_form(const FszSolution& sol) {
  const StochasticPoint sp;
  const CycPolynomial dQ = sol.Q.derivative();
  const CycPolynomial dP = sol.P.derivative();
  const Cyclotomic numerator = sp.q * dQ.evaluate(sp.qm2) * sol.P.evaluate(sp.q2) -
                               dQ.evaluate(sp.q2) * sol.P.evaluate(sp.qm2) -
                               sp.q_inv * sol.Q.evaluate(sp.q2) * dP.evaluate(sp.qm2) -
                               sp.q_inv * sol.Q.evaluate(sp.qm2) * dP.evaluate(sp.q2);
  return numerator / sp.i_sqrt3;
}

Cyclotomic quantity_A_frozen_root(const FszSolution& sol) {
  const StochasticPoint sp;
  // q carries the derivative; exp(i*phi) = q is held fixed.
  const Dual s{sp.q, Cyclotomic(1)};
  const Dual s2 = s * s;
  const Dual sm2 = s2.inverse();
  const Cyclotomic e2 = sp.q2;
  const Cyclotomic em2 = sp.qm2;
  // T(1) numerator with M = N: e^{2i phi} Q(q^2)P(q^-2) - e^{-2i phi} Q(q^-2)P(q^2)
  const Dual numerator = Dual(e2) * sol.Q.evaluate_in(s2) * sol.P.evaluate_in(sm2) -
                         Dual(em2) * sol.Q.evaluate_in(sm2) * sol.P.evaluate_in(s2);
  const Cyclotomic explicit_derivative = numerator.slope / (sp.q - sp.q_inv);
  return explicit_derivative / Cyclotomic(2);
}

Cyclotomic quantity_A_f_form(const FszSolution& sol) {
  const StochasticPoint sp;
  const CycPolynomial dfQ = sol.f_Q.derivative();
  const CycPolynomial dfP = sol.f_P.derivative();
  const Cyclotomic fQ_p = sol.f_Q.evaluate(sp.q2);
  const Cyclotomic fQ_m = sol.f_Q.evaluate(sp.qm2);
  const Cyclotomic fP_p = sol.f_P.evaluate(sp.q2);
  const Cyclotomic fP_m = sol.f_P.evaluate(sp.qm2);

  const Cyclotomic braces = sp.q * dfQ.evaluate(sp.qm2) * fP_p - dfQ.evaluate(sp.q2) * fP_m -
                            sp.q_inv * fQ_p * dfP.evaluate(sp.qm2) - sp.q_inv * fQ_m * dfP.evaluate(sp.q2);
  const Cyclotomic correction = fQ_m * fP_p - (Cyclotomic(1) + sp.q_inv) / sp.i_sqrt3 * fQ_p * fP_m;
  return braces / sp.i_sqrt3 - Cyclotomic(Rational(2 * sol.N)) * correction;
}

ARoutes quantity_A_routes(const FszSolution& sol) {
  ARoutes r;
  r.qp_form = quantity_A_qp_form(sol);
  r.frozen_root = quantity_A_frozen_root(sol);
  r.f_form = quantity_A_f_form(sol);
  r.f_form_matches = r.f_form == r.qp_form;
  return r;
}

Cyclotomic quantity_A(const FszSolution& sol) {
  Cyclotomic A = quantity_A_qp_form(sol);
  const Cyclotomic frozen = quantity_A_frozen_root(sol);
  if (assemble_nu_c(sol.N, A) != assemble_nu_c(sol.N, frozen)) {
    throw InconsistencyError("quantity_A: Q,P form " + A.str() + " and frozen-root derivative " +
                             frozen.str() + " give different nu_c at N = " + std::to_string(sol.N));
  }
  return A;
}

Cyclotomic quantity_C(const FszSolution& sol) {
  const StochasticPoint sp;
  Cyclotomic C = sp.q2 * sol.Q.evaluate(sp.q2) * sol.P.evaluate(sp.qm2) +
                 sp.qm2 * sol.Q.evaluate(sp.qm2) * sol.P.evaluate(sp.q2);
  // (1+q^2)(1+q^-2) = 1, so the (1+x)^{2N} factors cancel pairwise.
  const Cyclotomic f_form = sp.q2 * sol.f_Q.evaluate(sp.q2) * sol.f_P.evaluate(sp.qm2) +
                            sp.qm2 * sol.f_Q.evaluate(sp.qm2) * sol.f_P.evaluate(sp.q2);
  if (C != f_form) {
    throw InconsistencyError("quantity_C: Q,P form " + C.str() + " differs from f form " + f_form.str());
  }
  return C;
}

DerivativeBundle densities_via_tq(int N) { return densities_via_tq(build_fsz(N)); }

DerivativeBundle densities_via_tq(const FszSolution& sol) {
  const int N = sol.N;
  DerivativeBundle b;
  b.N = N;
  b.A = quantity_A(sol);
  b.C = quantity_C(sol);
  b.dlnT_dq = Cyclotomic(Rational(3) * Rational(2).pow(-2 * N)) * b.A;

  if (!b.C.is_rational()) throw InconsistencyError("densities_via_tq: C is not rational: " + b.C.str());
  b.dlnT_dphi_over_sqrt3 = b.C.as_rational() * Rational(2).pow(-2 * N);

  const Cyclotomic nu_c = assemble_nu_c(N, b.A);
  if (!nu_c.is_rational()) throw InconsistencyError("densities_via_tq: nu_c has imaginary part: " + nu_c.str());
  b.nu_c = nu_c.as_rational();
  // nu_nc = -(1/(2 sqrt3 N)) * sqrt3 * C / 2^{2N}
  b.nu_nc = -b.dlnT_dphi_over_sqrt3 / Rational(2 * N);

  const Rational expect_c = nu_c_exact(N);
  const Rational expect_nc = nu_nc_exact(N);
  if (b.nu_c != expect_c || b.nu_nc != expect_nc) {
    throw MismatchError("densities_via_tq: N = " + std::to_string(N) + " gives (" + b.nu_c.str() + ", " +
                        b.nu_nc.str() + "), closed form (" + expect_c.str() + ", " + expect_nc.str() + ")");
  }
  return b;
}

}  // namespace cyloops
