#pragma once

// Coefficient-wise checks of the functional equations at the stochastic
// point, and the suite runner behind `cyloops verify`.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyloops/fsz.hpp"

namespace cyloops {

struct IdentityCheck {
  std::string identity;
  int N = 0;
  bool ok = false;
  /// Lowest coefficient index where the two sides differ, when ok is false
  /// and the failure is a polynomial mismatch.
  std::optional<std::size_t> mismatch_index;
  std::string detail;
};

/// T(x) rebuilt from Q and P through the bilinear T-PQ formula equals
/// (1+x)^{2N}, and T(1) = 2^{2N}.
IdentityCheck verify_t_form(const FszSolution& sol);

/// [q Q(qu)P(u/q) - q^-1 Q(u/q)P(qu)] / (q - q^-1) = (1-u)^{2N}.
IdentityCheck verify_wronskian(const FszSolution& sol);

struct TqTpCheck {
  IdentityCheck tq;
  IdentityCheck tp;
  bool ok() const { return tq.ok && tp.ok; }
};

/// T(u)Q(u) = q phi(u/q) Q(q^2 u) + q^-1 phi(qu) Q(q^-2 u) and the conjugate
/// T-P relation with q <-> q^-1 on the exp(i phi) factors.
TqTpCheck verify_tq_tp(const FszSolution& sol);

enum class Suite { fsz, tq, kummer, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite s);

/// Identity names run by a suite, in report order.
std::vector<std::string> suite_identities(Suite s);

struct VerifyReport {
  std::vector<IdentityCheck> rows;
  bool all_passed() const;
  const IdentityCheck* first_failure() const;
};

/// One row per identity per N = 1..N_max. Failures (including thrown
/// errors) become report rows; nothing propagates.
VerifyReport verify_suite(int N_max, Suite suite = Suite::all);

}  // namespace cyloops
