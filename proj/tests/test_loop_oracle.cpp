#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "cyloops/closed_form.hpp"
#include "cyloops/six_vertex.hpp"
#include "cyloops/transfer_oracle.hpp"

using namespace cyloops;

TEST_CASE("state counts") {
  const auto s2 = enumerate_states(2);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].chords() == std::vector<Chord>{{0, 1, 0}});
  CHECK(s2[1].chords() == std::vector<Chord>{{0, 1, 1}});
  CHECK(enumerate_states(4).size() == 6);
  CHECK(enumerate_states(6).size() == 20);
  CHECK(enumerate_states(8).size() == 70);
  CHECK_THROWS_AS(enumerate_states(5), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_states(14), std::invalid_argument);
}

TEST_CASE("enumeration is a closure and canonically ordered") {
  for (int L : {2, 4, 6, 8, 10}) {
    const auto states = enumerate_states(L);
    std::set<std::uint64_t> keys;
    for (const auto& s : states) keys.insert(s.key());
    CHECK(keys.size() == states.size());
    for (std::size_t k = 1; k < states.size(); ++k) CHECK(states[k - 1] < states[k]);
    for (const auto& s : states)
      for (int i = 0; i < L; ++i) CHECK(keys.count(apply_generator(s, i).state.key()) == 1);
  }
}

TEST_CASE("generator on L = 2") {
  const LinkState even(2, {{0, 1, 0}});
  const LinkState odd(2, {{0, 1, 1}});
  auto r = apply_generator(even, 0);
  CHECK(r.loop == LoopClosed::contractible);
  CHECK(r.state == even);
  r = apply_generator(odd, 0);
  CHECK(r.loop == LoopClosed::non_contractible);
  CHECK(r.state == even);
  r = apply_generator(even, 1);
  CHECK(r.loop == LoopClosed::non_contractible);
  CHECK(r.state == odd);
}

TEST_CASE("seam parity is conserved away from the wrap generator") {
  for (int L : {4, 6}) {
    for (const auto& s : enumerate_states(L)) {
      int before = 0;
      for (const auto& c : s.chords()) before ^= c.parity;
      for (int i = 0; i < L - 1; ++i) {
        const auto r = apply_generator(s, i);
        int after = r.loop == LoopClosed::non_contractible ? 1 : 0;
        for (const auto& c : r.state.chords()) after ^= c.parity;
        CHECK(after == before);
      }
    }
  }
}

TEST_CASE("link state validation") {
  CHECK_THROWS_AS(LinkState(4, {{0, 2, 0}, {1, 3, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(LinkState(4, {{0, 1, 1}, {2, 3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(LinkState(4, {{0, 1, 0}, {1, 3, 0}}), std::invalid_argument);
  CHECK_NOTHROW(LinkState(4, {{0, 1, 1}, {2, 3, 0}}));
  CHECK(is_planar(4, {{0, 3, 1}, {1, 2, 1}}));
  CHECK_FALSE(is_planar(4, {{0, 3, 0}, {1, 2, 1}}));
}

TEST_CASE("transfer matrix: out-weight 2^L and nonnegative counts") {
  for (int L : {2, 4, 6}) {
    const TransferMatrix m = double_row_matrix(L, 1);
    for (std::size_t from = 0; from < m.dimension(); ++from) {
      std::uint64_t total = 0;
      for (std::size_t to = 0; to < m.dimension(); ++to) total += m.count(from, to);
      CHECK(total == (std::uint64_t{1} << L));
    }
  }
  CHECK_THROWS_AS(double_row_matrix(10), std::invalid_argument);
}

TEST_CASE("transfer matrix does not depend on the thread split") {
  const TransferMatrix a = double_row_matrix(6, 1);
  const TransferMatrix b = double_row_matrix(6, 3);
  CHECK(a.entries == b.entries);
}

TEST_CASE("row on L = 2") {
  const LinkState even(2, {{0, 1, 0}});
  // Tiles 0 then 1: the tops join directly and the bottom chord closes
  // through the strand across the seam.
  RowResult r = apply_row(even, 0b10);
  CHECK(r.contractible == 0);
  CHECK(r.non_contractible == 1);
  CHECK(r.state == even);
  // Tiles 0, 0: no loop closes, the new chord crosses the seam once.
  r = apply_row(even, 0b00);
  CHECK(r.contractible + r.non_contractible == 0);
  CHECK(r.state == LinkState(2, {{0, 1, 1}}));
}

TEST_CASE("oracle reproduces the closed forms exactly") {
  for (int L : {2, 4, 6, 8}) {
    CAPTURE(L);
    const OracleResult r = oracle_analysis(L);
    CHECK(r.record.nu_c == nu_c_exact(L / 2));
    CHECK(r.record.nu_nc == nu_nc_exact(L / 2));
    CHECK(r.nu_total == r.record.nu_c + r.record.nu_nc);
    CHECK(r.perron_value == Rational(std::int64_t{1} << L));
    CHECK(r.record.method == Method::transfer_oracle);
  }
}

TEST_CASE("six-vertex weights at the stochastic point") {
  const SixVertexWeights w = SixVertexWeights::make(4, M_PI / 3);
  CHECK(std::abs(w.a1 - std::conj(w.a2)) < 1e-15);
  CHECK(std::abs(w.b1 - std::conj(w.b2)) < 1e-15);
  CHECK(std::abs(w.c1 - w.c2) < 1e-15);
  CHECK(std::abs(w.c1.imag()) < 1e-15);
}

TEST_CASE("six-vertex check") {
  for (int L : {2, 4, 6}) {
    CAPTURE(L);
    const SixVertexReport r = sixvertex_check(L, 1e-4);
    CHECK(r.lambda_error < 1e-9);
    CHECK(r.symmetry_error < 1e-9);
    CHECK(r.nu_nc_error < 1e-6);
    CHECK(r.ok());
  }
  CHECK(std::abs(sixvertex_check(2).lambda_max - 4.0) < 1e-9);
  CHECK_THROWS_AS(sixvertex_check(4, 1e-2), std::invalid_argument);
  CHECK_THROWS_AS(sixvertex_check(3), std::invalid_argument);
}
