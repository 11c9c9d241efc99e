#pragma once

// Exact row-to-row transfer matrix of the O(1) dense loop model on link
// states, with contractible (w) and non-contractible (v) loop fugacities,
// and the first-order Perron perturbation that turns it into densities.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cyloops/closed_form.hpp"
#include "cyloops/link_state.hpp"
#include "cyloops/rational.hpp"

namespace cyloops {

/// (contractible loops closed, non-contractible loops closed) -> number of
/// tile configurations doing so. Value at (w, v) is sum count * w^j * v^k.
using FugacityEntry = std::map<std::pair<int, int>, std::uint64_t>;

struct RowResult {
  LinkState state;
  int contractible = 0;
  int non_contractible = 0;
};

/// Adds one row of L plaquettes on top of the state. Bit i of `tiles`
/// picks the tile in plaquette i: 0 joins (left, bottom) and (top, right),
/// 1 joins (left, top) and (bottom, right). The row is threaded by a
/// periodic horizontal strand; the arc leaving plaquette L-1 through its
/// right edge crosses the seam.
RowResult apply_row(const LinkState& s, std::uint64_t tiles);

struct TransferMatrix {
  int L = 0;
  std::vector<LinkState> states;
  /// entries[from][to], summed over all 2^L tile rows.
  std::vector<std::vector<FugacityEntry>> entries;

  std::size_t dimension() const { return states.size(); }
  /// Plain transition count (w = v = 1).
  std::uint64_t count(std::size_t from, std::size_t to) const;
};

/// The transfer matrix over enumerate_states(L); every row of tiles applied
/// to every state. Requires even L in [2, 8]. Assembly is split over
/// `threads` workers (0 = hardware concurrency); the result does not depend
/// on the split. Throws std::logic_error if a row leaves the state space.
TransferMatrix double_row_matrix(int L, unsigned threads = 0);

struct OracleResult {
  DensityRecord record;
  std::size_t n_states = 0;
  Rational perron_value;
  /// Combined derivative with w = v, which must equal nu_c + nu_nc.
  Rational nu_total;
};

/// Exact Perron analysis at w = v = 1: Lambda = 2^L is checked to be a simple
/// eigenvalue, left and right eigenvectors are solved over the rationals,
/// and nu = (l . dD . r) / (Lambda * (l . r)) / L for dD = dD/dw, dD/dv.
/// Throws InconsistencyError if the eigenvalue is not simple.
OracleResult oracle_analysis(int L);

/// oracle_analysis(L).record, method = transfer_oracle.
DensityRecord oracle_densities(int L);

}  // namespace cyloops
