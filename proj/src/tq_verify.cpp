#include "cyloops/tq_verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <locale>
#include <sstream>
#include <stdexcept>

#include "cyloops/hypergeometric.hpp"

namespace cyloops {

namespace {

// With M = N the factors (-q)^{2M-L} are identically 1 and are left out of
// every formula below.

std::optional<std::size_t> first_mismatch(const CycPolynomial& lhs, const CycPolynomial& rhs) {
  const auto n = static_cast<std::size_t>(std::max(lhs.degree(), rhs.degree()) + 1);
  for (std::size_t k = 0; k < n; ++k)
    if (lhs.coefficient(k) != rhs.coefficient(k)) return k;
  return std::nullopt;
}

IdentityCheck compare(std::string name, int N, const CycPolynomial& lhs, const CycPolynomial& rhs) {
  IdentityCheck c;
  c.identity = std::move(name);
  c.N = N;
  c.mismatch_index = first_mismatch(lhs, rhs);
  c.ok = !c.mismatch_index.has_value();
  if (!c.ok) {
    c.detail = "degrees " + std::to_string(lhs.degree()) + " vs " + std::to_string(rhs.degree()) +
               ", first differing coefficient x^" + std::to_string(*c.mismatch_index);
  }
  return c;
}

struct Shifts {
  Cyclotomic q = stochastic_q();
  Cyclotomic q_inv = q.inverse();
  Cyclotomic q2 = q.pow(2);
  Cyclotomic qm2 = q.pow(-2);
  Cyclotomic denom_inv = Cyclotomic::i_sqrt3().inverse();  // 1/(q - q^-1)
};

}  // namespace

IdentityCheck verify_t_form(const FszSolution& sol) {
  const Shifts s;
  const CycPolynomial numerator = s.q2 * (sol.Q.scale_arg(s.q2) * sol.P.scale_arg(s.qm2)) -
                                  s.qm2 * (sol.Q.scale_arg(s.qm2) * sol.P.scale_arg(s.q2));
  const CycPolynomial T = numerator * s.denom_inv;
  IdentityCheck c = compare("t_form", sol.N, T, CycPolynomial::one_plus_x_pow(static_cast<unsigned>(2 * sol.N)));
  if (c.ok) {
    const Cyclotomic t1 = T.evaluate(Cyclotomic(1));
    const Cyclotomic expected(Rational(2).pow(2 * sol.N));
    if (t1 != expected) {
      c.ok = false;
      c.detail = "T(1) = " + t1.str() + ", expected " + expected.str();
    }
  }
  return c;
}

IdentityCheck verify_wronskian(const FszSolution& sol) {
  const Shifts s;
  const CycPolynomial numerator = s.q * (sol.Q.scale_arg(s.q) * sol.P.scale_arg(s.q_inv)) -
                                  s.q_inv * (sol.Q.scale_arg(s.q_inv) * sol.P.scale_arg(s.q));
  return compare("wronskian", sol.N, numerator * s.denom_inv,
                 CycPolynomial::one_minus_x_pow(static_cast<unsigned>(2 * sol.N)));
}

TqTpCheck verify_tq_tp(const FszSolution& sol) {
  const Shifts s;
  const CycPolynomial phi = CycPolynomial::one_minus_x_pow(static_cast<unsigned>(2 * sol.N));
  const CycPolynomial phi_down = phi.scale_arg(s.q_inv);  // phi(u/q)
  const CycPolynomial phi_up = phi.scale_arg(s.q);        // phi(qu)

  const CycPolynomial tq_rhs = s.q * (phi_down * sol.Q.scale_arg(s.q2)) + s.q_inv * (phi_up * sol.Q.scale_arg(s.qm2));
  const CycPolynomial tp_rhs = s.q_inv * (phi_down * sol.P.scale_arg(s.q2)) + s.q * (phi_up * sol.P.scale_arg(s.qm2));
  return {compare("t_q", sol.N, sol.T * sol.Q, tq_rhs), compare("t_p", sol.N, sol.T * sol.P, tp_rhs)};
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "fsz") return Suite::fsz;
  if (name == "tq") return Suite::tq;
  if (name == "kummer") return Suite::kummer;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::fsz: return "fsz";
    case Suite::tq: return "tq";
    case Suite::kummer: return "kummer";
    case Suite::all: return "all";
  }
  return "unknown";
}

namespace {

const std::vector<std::string> kTqIdentities = {"t_form", "wronskian", "t_q", "t_p"};
const std::vector<std::string> kFszIdentities = {"fsz_structure", "a_routes", "c_routes",
                                                 "densities_via_tq", "closed_eval", "bethe_residual"};
const std::vector<std::string> kKummerIdentities = {"kummer"};

constexpr double kBetheTolerance = 1e-8;

IdentityCheck guarded(const std::string& name, int N, const std::function<IdentityCheck()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    IdentityCheck c;
    c.identity = name;
    c.N = N;
    c.ok = false;
    c.detail = e.what();
    return c;
  }
}

IdentityCheck passed(const std::string& name, int N, std::string detail = {}) {
  IdentityCheck c;
  c.identity = name;
  c.N = N;
  c.ok = true;
  c.detail = std::move(detail);
  return c;
}

IdentityCheck failed(const std::string& name, int N, std::string detail) {
  IdentityCheck c = passed(name, N);
  c.ok = false;
  c.detail = std::move(detail);
  return c;
}

IdentityCheck run_identity(const std::string& name, int N, const FszSolution* sol) {
  return guarded(name, N, [&]() -> IdentityCheck {
    if (name == "kummer") {
      const auto cases = kummer_sweep(N);
      for (const auto& kc : cases) {
        if (!kc.exact_match || !kc.numeric_match) {
          return failed(name, N, "a = " + kc.a.str() + ", b = " + kc.b.str() + ", n = " + std::to_string(kc.n) +
                                     ": series " + kc.series.str() + ", gamma form " + kc.gamma_exact.str());
        }
      }
      return passed(name, N, std::to_string(cases.size()) + " cases");
    }
    if (sol == nullptr) throw std::logic_error("no FSZ solution for " + name);
    if (name == "t_form") return verify_t_form(*sol);
    if (name == "wronskian") return verify_wronskian(*sol);
    if (name == "t_q") return verify_tq_tp(*sol).tq;
    if (name == "t_p") return verify_tq_tp(*sol).tp;
    if (name == "fsz_structure") {
      if (!sol->f_Q.has_rational_coefficients() || !sol->f_P.has_rational_coefficients())
        return failed(name, N, "f_Q or f_P has a nonzero w-component");
      if (sol->f_Q != sol->Q * sol->T || sol->f_P != sol->P * sol->T)
        return failed(name, N, "f != (quotient) * (1+x)^{2N}");
      return passed(name, N);
    }
    if (name == "a_routes") {
      const ARoutes r = quantity_A_routes(*sol);
      if (r.qp_form != r.frozen_root)
        return failed(name, N, "Q,P form " + r.qp_form.str() + " vs frozen-root " + r.frozen_root.str());
      return passed(name, N, r.f_form_matches ? "f-form agrees" : "f-form differs: " + r.f_form.str());
    }
    if (name == "c_routes") {
      const Cyclotomic C = quantity_C(*sol);
      if (!C.is_rational()) return failed(name, N, "C not rational: " + C.str());
      return passed(name, N, "C = " + C.str());
    }
    if (name == "densities_via_tq") {
      const DerivativeBundle b = densities_via_tq(*sol);
      return passed(name, N, b.nu_c.str() + " " + b.nu_nc.str());
    }
    if (name == "closed_eval") {
      const ClosedEval plus = fq_fp_closed_eval(N, +1);
      const ClosedEval minus = fq_fp_closed_eval(N, -1);
      if (minus.f_Q != plus.f_Q.conj() || minus.f_P != plus.f_P.conj())
        return failed(name, N, "sign -1 values are not the conjugates of sign +1 values");
      return passed(name, N);
    }
    if (name == "bethe_residual") {
      const double r = bethe_residual(*sol);
      std::ostringstream os;
      os.imbue(std::locale::classic());
      os.precision(3);
      os << "max residual " << std::scientific << r;
      if (!(r < kBetheTolerance)) return failed(name, N, os.str());
      return passed(name, N, os.str());
    }
    throw std::logic_error("unknown identity " + name);
  });
}

}  // namespace

std::vector<std::string> suite_identities(Suite s) {
  switch (s) {
    case Suite::tq: return kTqIdentities;
    case Suite::fsz: return kFszIdentities;
    case Suite::kummer: return kKummerIdentities;
    case Suite::all: {
      std::vector<std::string> all = kTqIdentities;
      all.insert(all.end(), kFszIdentities.begin(), kFszIdentities.end());
      all.insert(all.end(), kKummerIdentities.begin(), kKummerIdentities.end());
      return all;
    }
  }
  return {};
}

bool VerifyReport::all_passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const IdentityCheck& c) { return c.ok; });
}

const IdentityCheck* VerifyReport::first_failure() const {
  for (const auto& r : rows)
    if (!r.ok) return &r;
  return nullptr;
}

VerifyReport verify_suite(int N_max, Suite suite) {
  if (N_max < 1) throw std::invalid_argument("verify_suite: N_max must be >= 1");
  const auto names = suite_identities(suite);
  const bool needs_solution = suite != Suite::kummer;
  VerifyReport report;
  for (const auto& name : names) {
    for (int N = 1; N <= N_max; ++N) {
      std::optional<FszSolution> sol;
      if (needs_solution && name != "kummer") {
        try {
          sol = build_fsz(N);
        } catch (const std::exception& e) {
          report.rows.push_back(failed(name, N, std::string("build_fsz: ") + e.what()));
          continue;
        }
      }
      report.rows.push_back(run_identity(name, N, sol ? &*sol : nullptr));
    }
  }
  return report;
}

}  // namespace cyloops
