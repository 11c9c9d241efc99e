// cyloops: density tables, identity verification, exact and numeric
// oracles, Monte Carlo, and asymptotic residuals.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <locale>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyloops/closed_form.hpp"
#include "cyloops/monte_carlo.hpp"
#include "cyloops/six_vertex.hpp"
#include "cyloops/transfer_oracle.hpp"
#include "cyloops/tq_verify.hpp"

namespace {

using nlohmann::json;
using namespace cyloops;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json rational_json(const Rational& r) { return {{"num", r.numerator().str()}, {"den", r.denominator().str()}}; }

void require_even(int L) {
  if (L < 2 || L % 2 != 0)
    throw UsageError("L = " + std::to_string(L) + ": the cylinder circumference must be even and >= 2");
}

// "a:b", inclusive, even values only.
std::vector<int> parse_range(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("range must look like a:b, got '" + spec + "'");
  int a = 0;
  int b = 0;
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    a = std::stoi(spec.substr(0, colon), &used_a);
    b = std::stoi(spec.substr(colon + 1), &used_b);
    if (used_a != colon || used_b != spec.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::logic_error&) {
    throw UsageError("range must look like a:b with integers, got '" + spec + "'");
  }
  require_even(a);
  require_even(b);
  if (b < a) throw UsageError("empty range " + spec);
  std::vector<int> out;
  for (int L = a; L <= b; L += 2) out.push_back(L);
  return out;
}

std::vector<int> collect_sizes(const std::optional<int>& l, const std::string& range) {
  if (l && !range.empty()) throw UsageError("give either --l or --l-range, not both");
  if (l) {
    require_even(*l);
    return {*l};
  }
  if (range.empty()) throw UsageError("one of --l or --l-range is required");
  return parse_range(range);
}

// --- density ------------------------------------------------------------------

struct DensityArgs {
  std::optional<int> l;
  std::string range;
  std::string format = "text";
  std::string mode = "exact";
};

int cmd_density(const DensityArgs& a) {
  const std::vector<int> sizes = collect_sizes(a.l, a.range);
  std::vector<DensityRecord> rows;
  for (int L : sizes) rows.push_back(DensityRecord::make(L / 2, nu_c_exact(L / 2), nu_nc_exact(L / 2), Method::closed_form));

  if (a.format == "csv") {
    std::cout << "L,nu_c_num,nu_c_den,nu_nc_num,nu_nc_den,nu_c_float,nu_nc_float\n";
    for (const auto& r : rows) {
      std::cout << r.L << ',' << r.nu_c.numerator() << ',' << r.nu_c.denominator() << ',' << r.nu_nc.numerator() << ','
                << r.nu_nc.denominator() << ',' << r.nu_c_float << ',' << r.nu_nc_float << '\n';
    }
  } else if (a.format == "json") {
    json out = json::array();
    for (const auto& r : rows) {
      json row = {{"L", r.L}, {"N", r.N}, {"method", std::string(to_string(r.method))}};
      if (a.mode == "exact") {
        row["nu_c"] = rational_json(r.nu_c);
        row["nu_nc"] = rational_json(r.nu_nc);
      }
      row["nu_c_float"] = r.nu_c_float;
      row["nu_nc_float"] = r.nu_nc_float;
      out.push_back(row);
    }
    std::cout << out.dump(2) << '\n';
  } else {
    const bool single = rows.size() == 1;
    for (const auto& r : rows) {
      if (!single) std::cout << r.L << ' ';
      if (a.mode == "exact")
        std::cout << r.nu_c << ' ' << r.nu_nc << '\n';
      else
        std::cout << r.nu_c_float << ' ' << r.nu_nc_float << '\n';
    }
  }
  return kPass;
}

// --- verify -------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  int n_max = 8;
  std::string format = "text";
};

int cmd_verify(const VerifyArgs& a) {
  const auto suite = parse_suite(a.suite);
  if (!suite) throw UsageError("unknown suite '" + a.suite + "' (fsz, tq, kummer, all)");
  if (a.n_max < 1) throw UsageError("--n-max must be >= 1");
  const VerifyReport report = verify_suite(a.n_max, *suite);

  if (a.format == "json") {
    json rows = json::array();
    for (const auto& r : report.rows) {
      json row = {{"identity", r.identity}, {"N", r.N}, {"status", r.ok ? "PASS" : "FAIL"}, {"detail", r.detail}};
      if (r.mismatch_index) row["mismatch_index"] = *r.mismatch_index;
      rows.push_back(row);
    }
    std::cout << json{{"suite", a.suite}, {"n_max", a.n_max}, {"passed", report.all_passed()}, {"rows", rows}}.dump(2)
              << '\n';
  } else {
    for (const auto& r : report.rows) {
      std::cout << r.identity << " N=" << r.N << ' ' << (r.ok ? "PASS" : "FAIL");
      if (!r.detail.empty()) std::cout << "  " << r.detail;
      std::cout << '\n';
    }
    std::cout << report.rows.size() << " checks, " << (report.all_passed() ? "all passed" : "FAILURES") << '\n';
  }
  if (const IdentityCheck* bad = report.first_failure()) {
    std::cerr << "first failing identity: " << bad->identity << " at N=" << bad->N << ": " << bad->detail << '\n';
    return kFail;
  }
  return kPass;
}

// --- oracle -------------------------------------------------------------------

struct OracleArgs {
  int l = 0;
  std::string dump_matrix;
  bool six_vertex = false;
  double delta_phi = 1e-4;
};

json matrix_json(const TransferMatrix& m) {
  json states = json::array();
  for (const auto& s : m.states) {
    json chords = json::array();
    for (const auto& c : s.chords()) chords.push_back({c.a, c.b, c.parity});
    states.push_back(chords);
  }
  json entries = json::array();
  for (std::size_t from = 0; from < m.dimension(); ++from) {
    for (std::size_t to = 0; to < m.dimension(); ++to) {
      for (const auto& [jk, count] : m.entries[from][to])
        entries.push_back({{"from", from}, {"to", to}, {"contractible", jk.first}, {"non_contractible", jk.second},
                           {"count", count}});
    }
  }
  return {{"L", m.L}, {"states", states}, {"entries", entries}};
}

int cmd_oracle(const OracleArgs& a) {
  if (a.l != 2 && a.l != 4 && a.l != 6 && a.l != 8) throw UsageError("oracle: --l must be one of 2, 4, 6, 8");
  const OracleResult res = oracle_analysis(a.l);
  const Rational c = nu_c_exact(a.l / 2);
  const Rational nc = nu_nc_exact(a.l / 2);
  const bool match = res.record.nu_c == c && res.record.nu_nc == nc && res.nu_total == c + nc;

  std::cout << "L=" << a.l << " states=" << res.n_states << " perron=" << res.perron_value << '\n';
  std::cout << "oracle       " << res.record.nu_c << ' ' << res.record.nu_nc << '\n';
  std::cout << "closed-form  " << c << ' ' << nc << '\n';
  std::cout << (match ? "EXACT-MATCH" : "MISMATCH") << '\n';

  if (!a.dump_matrix.empty()) {
    std::ofstream f(a.dump_matrix);
    if (!f) throw UsageError("cannot write " + a.dump_matrix);
    f << matrix_json(double_row_matrix(a.l)).dump() << '\n';
  }
  bool six_ok = true;
  if (a.six_vertex) {
    const SixVertexReport r = sixvertex_check(a.l, a.delta_phi);
    six_ok = r.ok();
    std::cout << "six-vertex   " << r.str() << ' ' << (six_ok ? "PASS" : "FAIL") << '\n';
  }
  return match && six_ok ? kPass : kFail;
}

// --- simulate -----------------------------------------------------------------

struct SimulateArgs {
  int l = 0;
  std::int64_t height = 0;
  std::uint64_t seed = 0;
  int replicas = 16;
  unsigned threads = 0;
};

int cmd_simulate(const SimulateArgs& a) {
  MCConfig cfg;
  cfg.L = a.l;
  cfg.H = a.height;
  cfg.seed = a.seed;
  cfg.replicas = a.replicas;
  cfg.threads = a.threads;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const MCStats s = run(cfg);

  bool ok = true;
  const auto block = [&](double mean, const std::optional<double>& se, const Rational& exact) {
    json b = {{"mean", mean}, {"exact", rational_json(exact)}, {"exact_float", exact.to_double()}};
    b["stderr"] = se ? json(*se) : json(nullptr);
    if (se && *se > 0) {
      const double z = (mean - exact.to_double()) / *se;
      b["z"] = z;
      if (!(std::abs(z) < 4)) ok = false;
    } else {
      b["z"] = nullptr;
    }
    return b;
  };
  json out = {{"L", cfg.L},
              {"height", cfg.H},
              {"seed", cfg.seed},
              {"replicas", cfg.replicas},
              {"rng", cfg.rng_kind},
              {"n_sites_per_replica", s.n_sites},
              {"nu_c", block(s.mean_nu_c, s.stderr_nu_c, nu_c_exact(cfg.L / 2))},
              {"nu_nc", block(s.mean_nu_nc, s.stderr_nu_nc, nu_nc_exact(cfg.L / 2))},
              {"n_vertical_winding", s.n_vertical_winding},
              {"total_loops", s.total_loops}};
  out["pass"] = ok;
  std::cout << out.dump(2) << '\n';
  return ok ? kPass : kFail;
}

// --- asymptote ----------------------------------------------------------------

struct AsymptoteArgs {
  std::string range = "2:400";
  int order = 0;
  std::string quantity = "nu_c";
};

int cmd_asymptote(const AsymptoteArgs& a) {
  if (a.order < 0 || a.order > 2) throw UsageError("--order must be 0, 1 or 2");
  const bool contractible = a.quantity == "nu_c";
  if (!contractible && a.quantity != "nu_nc") throw UsageError("--quantity must be nu_c or nu_nc");
  const int power = contractible ? nu_c_residual_power(a.order) : nu_nc_residual_power(a.order);

  std::cout << "L,exact,series,residual,scaled\n";
  for (int L : parse_range(a.range)) {
    const int N = L / 2;
    const Real exact = (contractible ? nu_c_exact(N) : nu_nc_exact(N)).to_real();
    const Real series = contractible ? nu_c_asymptotic(N, a.order) : nu_nc_asymptotic(N, a.order);
    const Real residual = exact - series;
    const Real scaled = residual * pow(Real(L), power);
    std::cout << L << ',' << format_real(exact, 17) << ',' << format_real(series, 17) << ','
              << format_real(residual, 17) << ',' << format_real(scaled, 17) << '\n';
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  std::cout.imbue(std::locale::classic());
  CLI::App app{"Exact loop densities of the O(1) dense loop model on a cylinder"};
  app.require_subcommand(1);

  DensityArgs density;
  auto* d = app.add_subcommand("density", "Closed-form densities nu_c, nu_nc");
  d->add_option("--l", density.l, "Even circumference L");
  d->add_option("--l-range", density.range, "Inclusive even range a:b");
  d->add_option("--format", density.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  d->add_option("--mode", density.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Exact identity checks for N = 1..n-max");
  v->add_option("suite", verify.suite, "fsz, tq, kummer or all");
  v->add_option("--n-max", verify.n_max, "Largest N");
  v->add_option("--format", verify.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Exact transfer-matrix densities at L = 2, 4, 6, 8");
  o->add_option("--l", oracle.l, "Circumference")->required();
  o->add_option("--dump-matrix", oracle.dump_matrix, "Write the transfer matrix as JSON");
  o->add_flag("--six-vertex", oracle.six_vertex, "Also run the numeric six-vertex check");
  o->add_option("--delta-phi", oracle.delta_phi, "Finite-difference step for the twist derivative");

  SimulateArgs sim;
  sim.threads = default_thread_count();
  auto* s = app.add_subcommand("simulate", "Monte Carlo on an L x H torus");
  s->add_option("--l", sim.l, "Even circumference")->required();
  s->add_option("--height", sim.height, "Rows (>= 10 L)")->required();
  s->add_option("--seed", sim.seed, "64-bit seed");
  s->add_option("--replicas", sim.replicas, "Independent replicas");
  s->add_option("--threads", sim.threads, "Worker threads (default: CYLOOPS_THREADS or core count)");

  AsymptoteArgs asym;
  auto* as = app.add_subcommand("asymptote", "Exact minus large-N series, as CSV");
  as->add_option("--l-range", asym.range, "Inclusive even range a:b");
  as->add_option("--order", asym.order, "Series order 0, 1 or 2");
  as->add_option("--quantity", asym.quantity, "nu_c or nu_nc")->check(CLI::IsMember({"nu_c", "nu_nc"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*d) return cmd_density(density);
    if (*v) return cmd_verify(verify);
    if (*o) return cmd_oracle(oracle);
    if (*s) return cmd_simulate(sim);
    if (*as) return cmd_asymptote(asym);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
