#include "cyloops/monte_carlo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <thread>

namespace cyloops {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t stream_key(std::uint64_t seed, int replica_index) {
  return splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(replica_index));
}

// 64 tile bits per counter value.
std::uint64_t tile_word(std::uint64_t key, std::uint64_t block) { return splitmix64(key ^ splitmix64(block)); }

// Sides: 0 left, 1 bottom, 2 right, 3 top. Tile 0 pairs (left, bottom) and
// (right, top); tile 1 pairs (left, top) and (bottom, right).
constexpr std::array<std::array<int, 4>, 2> kExit{{{1, 0, 3, 2}, {3, 2, 1, 0}}};

}  // namespace

void MCConfig::validate() const {
  if (L < 2 || L % 2 != 0) throw std::invalid_argument("simulate: L must be even and >= 2 (even circumference)");
  if (H < 10 * static_cast<std::int64_t>(L)) throw std::invalid_argument("simulate: height must be at least 10 L");
  if (replicas < 1) throw std::invalid_argument("simulate: replicas must be >= 1");
  if (rng_kind != "splitmix64-counter") throw std::invalid_argument("simulate: unknown rng_kind " + rng_kind);
  if (static_cast<double>(L) * static_cast<double>(H) > 4e9) throw std::invalid_argument("simulate: lattice too large");
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("CYLOOPS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

int tile_bit(std::uint64_t seed, int replica_index, std::uint64_t site) {
  return static_cast<int>((tile_word(stream_key(seed, replica_index), site / 64) >> (site % 64)) & 1U);
}

LoopCensus sample_lattice(const MCConfig& cfg, int replica_index) {
  cfg.validate();
  const std::int64_t L = cfg.L;
  const std::int64_t H = cfg.H;
  const std::int64_t n_sites = L * H;

  const std::uint64_t key = stream_key(cfg.seed, replica_index);
  std::vector<std::uint64_t> tiles(static_cast<std::size_t>((n_sites + 63) / 64));
  for (std::size_t b = 0; b < tiles.size(); ++b) tiles[b] = tile_word(key, b);
  const auto tile = [&](std::int64_t site) { return static_cast<int>((tiles[site >> 6] >> (site & 63)) & 1U); };

  // Edge 2s is the right side of site s, edge 2s+1 its top side.
  std::vector<std::uint64_t> visited(static_cast<std::size_t>((2 * n_sites + 63) / 64), 0);
  const auto test_and_set = [&](std::int64_t e) {
    std::uint64_t& w = visited[e >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (e & 63);
    const bool was = (w & bit) != 0;
    w |= bit;
    return was;
  };

  LoopCensus c;
  c.n_sites = n_sites;
  for (std::int64_t e0 = 0; e0 < 2 * n_sites; ++e0) {
    if (test_and_set(e0)) continue;
    ++c.edges_visited;
    const std::int64_t s0 = e0 >> 1;
    std::int64_t x = s0 % L;
    std::int64_t y = s0 / L;
    std::int64_t dx = 0;
    std::int64_t dy = 0;
    int entry = 0;
    // Cross the starting edge.
    if ((e0 & 1) == 0) {
      x = (x + 1 == L) ? 0 : x + 1;
      ++dx;
      entry = 0;
    } else {
      y = (y + 1 == H) ? 0 : y + 1;
      ++dy;
      entry = 1;
    }
    for (;;) {
      const int exit = kExit[tile(x + L * y)][entry];
      std::int64_t e;
      switch (exit) {
        case 2: e = 2 * (x + L * y); break;
        case 3: e = 2 * (x + L * y) + 1; break;
        case 0: e = 2 * ((x == 0 ? L - 1 : x - 1) + L * y); break;
        default: e = 2 * (x + L * (y == 0 ? H - 1 : y - 1)) + 1; break;
      }
      if (test_and_set(e)) break;
      ++c.edges_visited;
      switch (exit) {
        case 2: x = (x + 1 == L) ? 0 : x + 1; ++dx; entry = 0; break;
        case 0: x = (x == 0) ? L - 1 : x - 1; --dx; entry = 2; break;
        case 3: y = (y + 1 == H) ? 0 : y + 1; ++dy; entry = 1; break;
        default: y = (y == 0) ? H - 1 : y - 1; --dy; entry = 3; break;
      }
    }
    if (dx % L != 0 || dy % H != 0) throw std::logic_error("sample_lattice: loop displacement is not a lattice period");
    if (dy != 0)
      ++c.vertical_winding;
    else if (dx != 0)
      ++c.non_contractible;
    else
      ++c.contractible;
  }
  if (c.edges_visited != 2 * n_sites)
    throw std::logic_error("sample_lattice: visited " + std::to_string(c.edges_visited) + " of " +
                           std::to_string(2 * n_sites) + " edges");
  return c;
}

MCStats run(const MCConfig& cfg) {
  cfg.validate();
  const auto R = static_cast<std::size_t>(cfg.replicas);
  std::vector<LoopCensus> census(R);

  unsigned threads = cfg.threads == 0 ? default_thread_count() : cfg.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, R));
  if (threads <= 1) {
    for (std::size_t r = 0; r < R; ++r) census[r] = sample_lattice(cfg, static_cast<int>(r));
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t r = t; r < R; r += threads) census[r] = sample_lattice(cfg, static_cast<int>(r));
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // Pooled in replica order, so the result is independent of the schedule.
  MCStats s;
  s.n_sites = census.front().n_sites;
  s.replicas = cfg.replicas;
  std::vector<double> nc(R);
  std::vector<double> nnc(R);
  for (std::size_t r = 0; r < R; ++r) {
    const auto sites = static_cast<double>(census[r].n_sites);
    nc[r] = static_cast<double>(census[r].contractible) / sites;
    nnc[r] = static_cast<double>(census[r].non_contractible) / sites;
    s.n_vertical_winding += census[r].vertical_winding;
    s.total_loops += census[r].total_loops();
  }
  const auto mean = [](const std::vector<double>& v) {
    double m = 0;
    for (double x : v) m += x;
    return m / static_cast<double>(v.size());
  };
  const auto standard_error = [](const std::vector<double>& v, double m) -> std::optional<double> {
    if (v.size() < 2) return std::nullopt;
    double ss = 0;
    for (double x : v) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
  };
  s.mean_nu_c = mean(nc);
  s.mean_nu_nc = mean(nnc);
  s.stderr_nu_c = standard_error(nc, s.mean_nu_c);
  s.stderr_nu_nc = standard_error(nnc, s.mean_nu_nc);
  s.per_replica = std::move(census);
  return s;
}

}  // namespace cyloops
