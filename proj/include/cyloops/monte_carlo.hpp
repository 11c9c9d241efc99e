#pragma once

// Monte Carlo estimate of the loop densities: uniform random tilings of an
// L x H torus, every loop traced once and classified by its winding.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyloops/rational.hpp"

namespace cyloops {

struct MCConfig {
  int L = 4;
  std::int64_t H = 0;
  std::uint64_t seed = 0;
  int replicas = 1;
  std::string rng_kind = "splitmix64-counter";
  /// Worker threads for replicas; 0 = default_thread_count().
  unsigned threads = 0;

  /// Throws std::invalid_argument unless L is even and >= 2, H >= 10 L,
  /// replicas >= 1 and rng_kind is supported.
  void validate() const;
};

/// CYLOOPS_THREADS if set to a positive integer, else hardware concurrency.
unsigned default_thread_count();

struct LoopCensus {
  std::int64_t n_sites = 0;
  std::int64_t contractible = 0;
  std::int64_t non_contractible = 0;
  /// Loops with nonzero vertical winding; excluded from both densities.
  std::int64_t vertical_winding = 0;
  std::int64_t edges_visited = 0;

  std::int64_t total_loops() const { return contractible + non_contractible + vertical_winding; }
};

/// Tile bit of every site is drawn from a counter-based stream keyed by
/// (seed, replica, site), so the census depends on nothing else. Throws
/// std::logic_error if tracing does not visit each of the 2 L H edges once.
LoopCensus sample_lattice(const MCConfig& cfg, int replica_index);

/// Tile choice (0 or 1) at site x + L y of a given replica.
int tile_bit(std::uint64_t seed, int replica_index, std::uint64_t site);

struct MCStats {
  std::int64_t n_sites = 0;  // per replica
  int replicas = 0;
  double mean_nu_c = 0;
  double mean_nu_nc = 0;
  /// Replica-to-replica standard errors; empty with a single replica.
  std::optional<double> stderr_nu_c;
  std::optional<double> stderr_nu_nc;
  std::int64_t n_vertical_winding = 0;
  std::int64_t total_loops = 0;
  std::vector<LoopCensus> per_replica;
};

MCStats run(const MCConfig& cfg);

}  // namespace cyloops
