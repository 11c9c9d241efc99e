// Runs the nine acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <locale>
#include <sstream>
#include <string>
#include <vector>

#include "cyloops/closed_form.hpp"
#include "cyloops/fsz.hpp"
#include "cyloops/hypergeometric.hpp"
#include "cyloops/monte_carlo.hpp"
#include "cyloops/six_vertex.hpp"
#include "cyloops/tq_verify.hpp"
#include "cyloops/transfer_oracle.hpp"

using namespace cyloops;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Recorder {
 public:
  void fail(const std::string& what) {
    if (out_.ok) out_.detail = what;
    out_.ok = false;
  }
  void note(const std::string& what) {
    if (out_.ok) out_.detail = what;
  }
  Outcome result() const { return out_; }

 private:
  Outcome out_;
};

std::string fmt(double x, int precision = 6) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(precision) << x;
  return os.str();
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome ac1() {
  Recorder r;
  const Rational c[] = {Rational(1, 8),        Rational(17, 160),       Rational(913, 8960),
                        Rational(3953, 39424), Rational(14569, 146432), Rational(3945737, 39829504)};
  const Rational nc[] = {Rational(1, 8),          Rational(11, 320),       Rational(421, 26880),
                         Rational(1403, 157696),  Rational(4189, 732160),  Rational(952067, 238977024)};
  int matched = 0;
  for (int N = 1; N <= 6; ++N) {
    if (nu_c_exact(N) == c[N - 1]) ++matched; else r.fail("nu_c(N=" + std::to_string(N) + ") = " + nu_c_exact(N).str());
    if (nu_nc_exact(N) == nc[N - 1]) ++matched; else r.fail("nu_nc(N=" + std::to_string(N) + ") = " + nu_nc_exact(N).str());
  }
  r.note(std::to_string(matched) + "/12 rationals exact");
  return r.result();
}

Outcome ac2() {
  Recorder r;
  for (int N = 1; N <= 25; ++N) {
    const DerivativeBundle b = densities_via_tq(N);  // throws on any imaginary part or mismatch
    if (!b.C.is_rational()) r.fail("C not rational at N=" + std::to_string(N));
    if (b.nu_c != nu_c_exact(N) || b.nu_nc != nu_nc_exact(N)) r.fail("mismatch at N=" + std::to_string(N));
  }
  r.note("N=1..25 exact, C rational");
  return r.result();
}

Outcome ac3() {
  Recorder r;
  const VerifyReport rep = verify_suite(25, Suite::tq);
  for (const auto& row : rep.rows)
    if (!row.ok) r.fail(row.identity + " at N=" + std::to_string(row.N) + ": " + row.detail);
  for (int N = 1; N <= 25; ++N) {
    const FszSolution s = build_fsz(N);  // throws NotDivisible otherwise
    if (s.f_Q != s.Q * s.T || s.f_P != s.P * s.T) r.fail("divisibility at N=" + std::to_string(N));
  }
  r.note(std::to_string(rep.rows.size()) + " polynomial identities, N=1..25");
  return r.result();
}

Outcome ac4() {
  Recorder r;
  double t8 = 0;
  for (int L : {2, 4, 6, 8}) {
    const auto t0 = Clock::now();
    const DensityRecord d = oracle_densities(L);
    if (L == 8) t8 = seconds_since(t0);
    if (d.nu_c != nu_c_exact(L / 2) || d.nu_nc != nu_nc_exact(L / 2))
      r.fail("L=" + std::to_string(L) + " oracle " + d.nu_c.str() + " " + d.nu_nc.str());
  }
  if (t8 >= 60) r.fail("L=8 took " + fmt(t8) + " s");
  r.note("L=2,4,6,8 exact; L=8 in " + fmt(t8, 3) + " s");
  return r.result();
}

Outcome ac5() {
  Recorder r;
  double worst = 0;
  for (int N = 1; N <= 8; ++N) worst = std::max(worst, bethe_residual(build_fsz(N)));
  if (!(worst < 1e-8)) r.fail("max residual " + fmt(worst));
  r.note("max residual " + fmt(worst, 3));
  return r.result();
}

Outcome ac6() {
  Recorder r;
  std::size_t n_cases = 0;
  for (int N = 1; N <= 8; ++N) {
    for (const auto& kc : kummer_sweep(N, 1e-12)) {
      ++n_cases;
      if (!kc.exact_match || !kc.numeric_match)
        r.fail("a=" + kc.a.str() + " b=" + kc.b.str() + " n=" + std::to_string(kc.n));
    }
  }
  r.note(std::to_string(n_cases) + " cases, n in [-2, 2]");
  return r.result();
}

Outcome ac7() {
  Recorder r;
  const auto scaled = [](bool contractible, int N, int k) {
    const Real exact = (contractible ? nu_c_exact(N) : nu_nc_exact(N)).to_real();
    const Real series = contractible ? nu_c_asymptotic(N, k) : nu_nc_asymptotic(N, k);
    const int p = contractible ? nu_c_residual_power(k) : nu_nc_residual_power(k);
    return static_cast<double>(abs(exact - series) * pow(Real(2 * N), p));
  };
  for (bool contractible : {true, false}) {
    for (int k = 0; k <= 2; ++k) {
      double peak = 0;
      for (int N = 1; N <= 200; ++N) peak = std::max(peak, scaled(contractible, N, k));
      const double s100 = scaled(contractible, 100, k);
      const double s200 = scaled(contractible, 200, k);
      const std::string tag = std::string(contractible ? "nu_c" : "nu_nc") + " k=" + std::to_string(k);
      if (!std::isfinite(peak) || peak > 100) r.fail(tag + " unbounded: " + fmt(peak));
      if (std::abs(s200 - s100) > 0.01 * std::abs(s200)) r.fail(tag + " not stabilizing");
    }
  }
  const double target_c = 1 / (4 * std::sqrt(3.0));
  const double c0 = scaled(true, 200, 0);
  if (std::abs(c0 - target_c) > 0.05 * target_c) r.fail("nu_c k=0 plateau " + fmt(c0));
  const double target_nc = 1 / std::sqrt(3.0);
  const double nc0 = 400.0 * 400.0 * nu_nc_exact(200).to_double();
  if (std::abs(nc0 - target_nc) > 0.05 * target_nc) r.fail("(2N)^2 nu_nc = " + fmt(nc0));
  r.note("N=200: nu_c plateau " + fmt(c0) + ", (2N)^2 nu_nc " + fmt(nc0));
  return r.result();
}

Outcome ac8() {
  Recorder r;
  const auto t0 = Clock::now();
  std::string summary;
  for (int L : {2, 4, 6}) {
    MCConfig cfg;
    cfg.L = L;
    cfg.H = 200000;
    cfg.seed = 7;
    cfg.replicas = 16;
    const MCStats s = run(cfg);
    const double zc = (s.mean_nu_c - nu_c_exact(L / 2).to_double()) / *s.stderr_nu_c;
    const double znc = (s.mean_nu_nc - nu_nc_exact(L / 2).to_double()) / *s.stderr_nu_nc;
    if (!(std::abs(zc) < 4) || !(std::abs(znc) < 4)) r.fail("L=" + std::to_string(L) + " z=" + fmt(zc, 3) + "," + fmt(znc, 3));
    summary += " L=" + std::to_string(L) + " z=(" + fmt(zc, 2) + "," + fmt(znc, 2) + ")";
  }
  const double t = seconds_since(t0);
  if (t >= 120) r.fail("took " + fmt(t) + " s");
  r.note(summary.substr(1));
  return r.result();
}

Outcome ac9() {
  Recorder r;
  for (int L : {2, 4, 6}) {
    const SixVertexReport rep = sixvertex_check(L, 1e-4);
    if (!(rep.lambda_error < 1e-9)) r.fail("L=" + std::to_string(L) + " |Lambda - 2^L| = " + fmt(rep.lambda_error));
    if (L == 4 && !(rep.nu_nc_error < 1e-6)) r.fail("L=4 nu_nc error " + fmt(rep.nu_nc_error));
    if (L == 4) r.note("L=4 nu_nc error " + fmt(rep.nu_nc_error, 3));
  }
  return r.result();
}

}  // namespace

int main() {
  std::cout.imbue(std::locale::classic());
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 closed-form reproduction", ac1},   {"AC2 derivation-chain closure", ac2},
      {"AC3 functional identities", ac3},      {"AC4 transfer-matrix oracle", ac4},
      {"AC5 Bethe residuals", ac5},            {"AC6 Kummer contiguous identities", ac6},
      {"AC7 asymptotics", ac7},                {"AC8 Monte Carlo", ac8},
      {"AC9 six-vertex numeric check", ac9},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double t = seconds_since(t0);
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << name << " (" << fmt(t, 3) << " s)  " << o.detail << std::endl;
    if (!o.ok) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures;
}
