#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cyloops/closed_form.hpp"
#include "cyloops/monte_carlo.hpp"

using namespace cyloops;

namespace {

MCConfig config(int L, std::int64_t H, std::uint64_t seed, int replicas) {
  MCConfig c;
  c.L = L;
  c.H = H;
  c.seed = seed;
  c.replicas = replicas;
  c.threads = 1;
  return c;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_THROWS_AS(config(3, 100, 1, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(config(4, 39, 1, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(config(4, 40, 1, 0).validate(), std::invalid_argument);
  CHECK_NOTHROW(config(4, 40, 1, 1).validate());
  MCConfig bad = config(4, 40, 1, 1);
  bad.rng_kind = "mt19937";
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("every edge is traced exactly once") {
  for (int L : {2, 4, 6, 10}) {
    const MCConfig c = config(L, 10 * L + 3, 99, 1);
    const LoopCensus census = sample_lattice(c, 0);
    CHECK(census.edges_visited == 2 * census.n_sites);
    CHECK(census.total_loops() > 0);
  }
}

TEST_CASE("census is a pure function of (seed, replica)") {
  const MCConfig c = config(4, 400, 7, 1);
  const LoopCensus a = sample_lattice(c, 3);
  const LoopCensus b = sample_lattice(c, 3);
  CHECK(a.contractible == b.contractible);
  CHECK(a.non_contractible == b.non_contractible);
  CHECK(a.vertical_winding == b.vertical_winding);
  const LoopCensus other = sample_lattice(c, 4);
  CHECK((a.contractible != other.contractible || a.non_contractible != other.non_contractible));
}

TEST_CASE("tile stream is balanced") {
  std::int64_t ones = 0;
  const int n = 1 << 16;
  for (int s = 0; s < n; ++s) ones += tile_bit(42, 0, static_cast<std::uint64_t>(s));
  CHECK(std::abs(static_cast<double>(ones) / n - 0.5) < 0.01);
}

TEST_CASE("results do not depend on thread count") {
  MCConfig c = config(4, 2000, 11, 6);
  const MCStats one = run(c);
  c.threads = 3;
  const MCStats three = run(c);
  CHECK(one.mean_nu_c == three.mean_nu_c);
  CHECK(one.mean_nu_nc == three.mean_nu_nc);
  CHECK(*one.stderr_nu_c == *three.stderr_nu_c);
}

TEST_CASE("single replica has no error bar") {
  const MCStats s = run(config(2, 100, 1, 1));
  CHECK_FALSE(s.stderr_nu_c.has_value());
  CHECK_FALSE(s.stderr_nu_nc.has_value());
}

TEST_CASE("L = 2 estimate agrees with 1/8") {
  const MCStats s = run(config(2, 200000, 2024, 8));
  REQUIRE(s.stderr_nu_c.has_value());
  CHECK(std::abs(s.mean_nu_c - 0.125) < 4 * *s.stderr_nu_c);
  CHECK(std::abs(s.mean_nu_nc - 0.125) < 4 * *s.stderr_nu_nc);
}

TEST_CASE("vertical winding is rare for tall tori") {
  const MCStats s = run(config(4, 400, 5, 8));
  CHECK(static_cast<double>(s.n_vertical_winding) / static_cast<double>(s.total_loops) < 1e-4);
}

TEST_CASE("doubling replicas shrinks the error bar by about 1/sqrt2") {
  const MCStats a = run(config(4, 20000, 8, 32));
  const MCStats b = run(config(4, 20000, 8, 64));
  const double ratio = *b.stderr_nu_c / *a.stderr_nu_c;
  CHECK(ratio == doctest::Approx(1 / std::sqrt(2.0)).epsilon(0.2));
}
