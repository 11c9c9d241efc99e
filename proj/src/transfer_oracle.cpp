#include "cyloops/transfer_oracle.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <thread>

#include "cyloops/errors.hpp"

namespace cyloops {

namespace {

struct Edge {
  int u;
  int v;
  int parity;
};

// Graph of one row on top of a link state. Nodes: bottom points 0..L-1,
// horizontal strand L..2L-1, top points 2L..3L-1. Every node has degree 2
// except top points (degree 1).
class RowGraph {
 public:
  explicit RowGraph(int L) : L_(L), incident_(3 * L) {}

  void add(int u, int v, int parity) {
    const int e = static_cast<int>(edges_.size());
    edges_.push_back({u, v, parity});
    incident_[u].push_back(e);
    incident_[v].push_back(e);
  }

  bool is_top(int node) const { return node >= 2 * L_; }
  int bottom(int i) const { return i; }
  int strand(int i) const { return L_ + i; }
  int top(int i) const { return 2 * L_ + i; }

  struct WalkEnd {
    int node;
    int parity;
  };

  // Follows arcs from `node` along edge e until a top point is reached or
  // the next edge has already been used (a closed cycle).
  WalkEnd walk(int node, int e, std::vector<char>& used) const {
    int parity = 0;
    for (;;) {
      used[e] = 1;
      const Edge& ed = edges_[e];
      parity ^= ed.parity;
      node = (ed.u == node) ? ed.v : ed.u;
      if (is_top(node)) return {node, parity};
      const auto& inc = incident_[node];
      const int next = (inc[0] == e) ? inc[1] : inc[0];
      if (used[next]) return {node, parity};
      e = next;
    }
  }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& incident(int node) const { return incident_[node]; }

 private:
  int L_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

}  // namespace

RowResult apply_row(const LinkState& s, std::uint64_t tiles) {
  const int L = s.size();
  RowGraph g(L);
  for (const Chord& c : s.chords()) g.add(g.bottom(c.a), g.bottom(c.b), c.parity);
  for (int i = 0; i < L; ++i) {
    const int right = (i + 1) % L;
    const int seam = (i == L - 1) ? 1 : 0;
    if (((tiles >> i) & 1U) == 0) {
      g.add(g.strand(i), g.bottom(i), 0);
      g.add(g.top(i), g.strand(right), seam);
    } else {
      g.add(g.strand(i), g.top(i), 0);
      g.add(g.bottom(i), g.strand(right), seam);
    }
  }

  std::vector<char> used(g.edges().size(), 0);
  std::vector<Chord> chords;
  for (int i = 0; i < L; ++i) {
    const int start = g.top(i);
    const int e = g.incident(start)[0];
    if (used[e]) continue;
    const auto end = g.walk(start, e, used);
    const int j = end.node - 2 * L;
    chords.push_back({std::min(i, j), std::max(i, j), end.parity});
  }

  RowResult r;
  for (std::size_t e = 0; e < used.size(); ++e) {
    if (used[e]) continue;
    const auto end = g.walk(g.edges()[e].u, static_cast<int>(e), used);
    if (end.parity == 0)
      ++r.contractible;
    else
      ++r.non_contractible;
  }
  std::sort(chords.begin(), chords.end());
  r.state = LinkState(L, chords);
  return r;
}

std::uint64_t TransferMatrix::count(std::size_t from, std::size_t to) const {
  std::uint64_t total = 0;
  for (const auto& [jk, c] : entries.at(from).at(to)) total += c;
  return total;
}

TransferMatrix double_row_matrix(int L, unsigned threads) {
  if (L < 2 || L > 8 || L % 2 != 0)
    throw std::invalid_argument("double_row_matrix: L must be even and in [2, 8], got " + std::to_string(L));
  TransferMatrix m;
  m.L = L;
  m.states = enumerate_states(L);
  const std::size_t n = m.states.size();
  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index.emplace(m.states[k].key(), k);
  m.entries.assign(n, std::vector<FugacityEntry>(n));

  const std::uint64_t n_rows = std::uint64_t{1} << L;
  const auto fill = [&](std::size_t from) {
    for (std::uint64_t tiles = 0; tiles < n_rows; ++tiles) {
      const RowResult r = apply_row(m.states[from], tiles);
      const auto it = index.find(r.state.key());
      if (it == index.end())
        throw std::logic_error("double_row_matrix: row maps " + m.states[from].str() + " outside the state space");
      ++m.entries[from][it->second][{r.contractible, r.non_contractible}];
    }
  };

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t from = 0; from < n; ++from) fill(from);
    return m;
  }
  // Workers own disjoint source states, so no merge is needed.
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t from = t; from < n; from += threads) fill(from);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return m;
}

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

BigInt gcd_abs(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

// Kernel of an integer matrix by fraction-free elimination (rows are
// reduced by their content after each update). Throws if the kernel is not
// one-dimensional.
std::vector<Rational> kernel_vector(IntMatrix a, const char* which) {
  const std::size_t n = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(a[row], a[p]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const BigInt f = a[r][col];
      const BigInt piv = a[row][col];
      BigInt content = 0;
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] = a[r][c] * piv - a[row][c] * f;
        content = gcd_abs(content, a[r][c]);
      }
      if (content > 1)
        for (auto& x : a[r]) x /= content;
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (row != n - 1) {
    throw InconsistencyError(std::string("oracle: eigenvalue 2^L is not simple (") + which + " kernel has dimension " +
                             std::to_string(n - row) + ")");
  }
  std::size_t free_col = n - 1;
  for (std::size_t k = 0; k < pivot_col.size(); ++k) {
    if (pivot_col[k] != k) {
      free_col = k;
      break;
    }
  }
  std::vector<Rational> x(n);
  x[free_col] = Rational(1);
  for (std::size_t k = 0; k < pivot_col.size(); ++k)
    x[pivot_col[k]] = -Rational(a[k][free_col], a[k][pivot_col[k]]);
  return x;
}

}  // namespace

OracleResult oracle_analysis(int L) {
  const TransferMatrix m = double_row_matrix(L);
  const std::size_t n = m.dimension();
  const std::int64_t lambda = std::int64_t{1} << L;

  // M[to][from] acts on column vectors; dM_* are the fugacity derivatives
  // at w = v = 1.
  IntMatrix right(n, std::vector<BigInt>(n));
  IntMatrix left(n, std::vector<BigInt>(n));
  std::vector<std::vector<std::int64_t>> dw(n, std::vector<std::int64_t>(n, 0));
  std::vector<std::vector<std::int64_t>> dv(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t from = 0; from < n; ++from) {
    // Nonnegative with constant out-weight 2^L, so 2^L is the spectral radius.
    std::int64_t out_weight = 0;
    for (std::size_t to = 0; to < n; ++to) out_weight += static_cast<std::int64_t>(m.count(from, to));
    if (out_weight != lambda)
      throw InconsistencyError("oracle: out-weight of " + m.states[from].str() + " is " + std::to_string(out_weight));
    for (std::size_t to = 0; to < n; ++to) {
      std::int64_t plain = 0;
      for (const auto& [jk, c] : m.entries[from][to]) {
        const auto count = static_cast<std::int64_t>(c);
        plain += count;
        dw[to][from] += count * jk.first;
        dv[to][from] += count * jk.second;
      }
      right[to][from] = plain;
      left[from][to] = plain;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    right[k][k] -= lambda;
    left[k][k] -= lambda;
  }
  const std::vector<Rational> r = kernel_vector(std::move(right), "right");
  const std::vector<Rational> l = kernel_vector(std::move(left), "left");

  Rational lr;
  for (std::size_t k = 0; k < n; ++k) lr += l[k] * r[k];
  if (lr.is_zero()) throw InconsistencyError("oracle: left and right Perron vectors are orthogonal");

  const auto bilinear = [&](const std::vector<std::vector<std::int64_t>>& d) {
    Rational s;
    for (std::size_t i = 0; i < n; ++i) {
      if (l[i].is_zero()) continue;
      Rational row;
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][j] != 0) row += Rational(d[i][j]) * r[j];
      s += l[i] * row;
    }
    return s;
  };
  const Rational scale = Rational(lambda) * lr * Rational(L);

  OracleResult out;
  out.n_states = n;
  out.perron_value = Rational(lambda);
  const Rational nu_c = bilinear(dw) / scale;
  const Rational nu_nc = bilinear(dv) / scale;
  std::vector<std::vector<std::int64_t>> both(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) both[i][j] = dw[i][j] + dv[i][j];
  out.nu_total = bilinear(both) / scale;
  out.record = DensityRecord::make(L / 2, nu_c, nu_nc, Method::transfer_oracle);
  return out;
}

DensityRecord oracle_densities(int L) { return oracle_analysis(L).record; }

}  // namespace cyloops
