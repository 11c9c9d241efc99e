#include "cyloops/link_state.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cyloops {

namespace {

void check_size(int L, const char* where) {
  if (L < 2 || L > LinkState::kMaxSize || L % 2 != 0)
    throw std::invalid_argument(std::string(where) + ": L must be even and in [2, 12], got " + std::to_string(L));
}

// Points strictly inside the disk cut off by the chord (the side away from
// the hole): between a and b for parity 0, around the seam for parity 1.
bool encloses(const Chord& c, int point) {
  const bool between = point > c.a && point < c.b;
  return c.parity == 0 ? between : (point > c.b || point < c.a);
}

}  // namespace

bool is_planar(int L, const std::vector<Chord>& chords) {
  (void)L;
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      const Chord& x = chords[i];
      const Chord& y = chords[j];
      const bool ya_in = y.a > x.a && y.a < x.b;
      const bool yb_in = y.b > x.a && y.b < x.b;
      if (ya_in != yb_in) return false;
      if (encloses(x, y.a) && encloses(y, x.a)) return false;
    }
  }
  return true;
}

LinkState::LinkState(int L, const std::vector<Chord>& chords) {
  check_size(L, "LinkState");
  if (static_cast<int>(chords.size()) * 2 != L) throw std::invalid_argument("LinkState: need L/2 chords");
  match_.assign(L, 0xff);
  parity_.assign(L, 0);
  for (const Chord& c : chords) {
    if (c.a < 0 || c.b >= L || c.a >= c.b) throw std::invalid_argument("LinkState: chord endpoints out of order");
    if (c.parity != 0 && c.parity != 1) throw std::invalid_argument("LinkState: parity must be 0 or 1");
    if (match_[c.a] != 0xff || match_[c.b] != 0xff) throw std::invalid_argument("LinkState: point used twice");
    match_[c.a] = static_cast<std::uint8_t>(c.b);
    match_[c.b] = static_cast<std::uint8_t>(c.a);
    parity_[c.a] = parity_[c.b] = static_cast<std::uint8_t>(c.parity);
  }
  if (!is_planar(L, chords)) throw std::invalid_argument("LinkState: chords cross on the annulus");
}

LinkState LinkState::nested(int L) {
  check_size(L, "LinkState::nested");
  std::vector<Chord> chords;
  for (int i = 0; i < L / 2; ++i) chords.push_back({i, L - 1 - i, 0});
  return LinkState(L, chords);
}

std::vector<Chord> LinkState::chords() const {
  std::vector<Chord> out;
  for (int i = 0; i < size(); ++i)
    if (match_[i] > i) out.push_back({i, match_[i], parity_[i]});
  return out;
}

std::uint64_t LinkState::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < size(); ++i) {
    k |= static_cast<std::uint64_t>(match_[i]) << (4 * i);
    if (match_[i] > i && parity_[i] != 0) k |= std::uint64_t{1} << (48 + i);
  }
  return k;
}

std::string LinkState::str() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const Chord& c : chords()) {
    if (!first) os << ' ';
    first = false;
    os << '(' << c.a << ',' << c.b << (c.parity ? ")'" : ")");
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LinkState& s) { return os << s.str(); }

GeneratorResult apply_generator(const LinkState& s, int i) {
  const int L = s.size();
  if (i < 0 || i >= L) throw std::out_of_range("apply_generator: site index out of range");
  const int a = i;
  const int b = (i + 1) % L;
  const int wrap = (i == L - 1) ? 1 : 0;

  std::vector<Chord> next;
  GeneratorResult r;
  const auto keep = [&](int x) { return x != a && x != b && x != s.partner(a) && x != s.partner(b); };
  for (const Chord& c : s.chords())
    if (keep(c.a)) next.push_back(c);

  if (s.partner(a) == b) {
    r.loop = (s.parity(a) ^ wrap) == 0 ? LoopClosed::contractible : LoopClosed::non_contractible;
  } else {
    const int a2 = s.partner(a);
    const int b2 = s.partner(b);
    next.push_back({std::min(a2, b2), std::max(a2, b2), s.parity(a) ^ s.parity(b) ^ wrap});
  }
  next.push_back({std::min(a, b), std::max(a, b), wrap});
  std::sort(next.begin(), next.end());
  r.state = LinkState(L, next);
  return r;
}

std::vector<LinkState> enumerate_states(int L) {
  check_size(L, "enumerate_states");
  std::set<LinkState> seen{LinkState::nested(L)};
  std::vector<LinkState> stack(seen.begin(), seen.end());
  while (!stack.empty()) {
    const LinkState s = stack.back();
    stack.pop_back();
    for (int i = 0; i < L; ++i) {
      GeneratorResult r = apply_generator(s, i);
      if (seen.insert(r.state).second) stack.push_back(std::move(r.state));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace cyloops
