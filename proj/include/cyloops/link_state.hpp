#pragma once

// Planar pairings of the L boundary points of a half-infinite cylinder,
// each chord carrying its seam-crossing parity, and the Temperley-Lieb
// generators acting on them.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace cyloops {

/// Chord {a, b} with a < b and its number of seam crossings mod 2. The seam
/// sits between points L-1 and 0.
struct Chord {
  int a = 0;
  int b = 0;
  int parity = 0;

  friend auto operator<=>(const Chord&, const Chord&) = default;
};

class LinkState {
 public:
  static constexpr int kMaxSize = 12;

  LinkState() = default;

  /// Builds from a chord list; throws std::invalid_argument unless the chords
  /// pair every point exactly once and are non-crossing on the annulus.
  LinkState(int L, const std::vector<Chord>& chords);

  /// {i, L-1-i} for all i < L/2, parity 0.
  static LinkState nested(int L);

  int size() const { return static_cast<int>(match_.size()); }
  int partner(int i) const { return match_.at(i); }
  /// Parity of the chord ending at i.
  int parity(int i) const { return parity_.at(i); }

  /// Chords sorted by smaller endpoint; this is the canonical form.
  std::vector<Chord> chords() const;

  /// Injective packing of the state into 64 bits (valid for L <= 12).
  std::uint64_t key() const;

  std::string str() const;

  friend bool operator==(const LinkState&, const LinkState&) = default;
  /// Lexicographic order of the canonical chord lists.
  friend bool operator<(const LinkState& x, const LinkState& y) { return x.chords() < y.chords(); }

 private:
  std::vector<std::uint8_t> match_;
  std::vector<std::uint8_t> parity_;
};

std::ostream& operator<<(std::ostream& os, const LinkState& s);

/// True when the chords are pairwise non-crossing on the annulus: endpoints
/// never interleave, and no two chords each enclose the other (which would
/// swallow the hole).
bool is_planar(int L, const std::vector<Chord>& chords);

enum class LoopClosed { none, contractible, non_contractible };

struct GeneratorResult {
  LinkState state;
  LoopClosed loop = LoopClosed::none;
};

/// e_i joining points i and (i+1) mod L. The wrap generator i = L-1 crosses
/// the seam, so the chords it creates or extends pick up one unit of parity.
GeneratorResult apply_generator(const LinkState& s, int i);

/// All states reachable from LinkState::nested(L) under the generators,
/// sorted canonically. Requires even L in [2, 12].
std::vector<LinkState> enumerate_states(int L);

}  // namespace cyloops
