#pragma once

// Seeded generators for the property tests.

#include <cstdint>
#include <random>

#include "cyloops/cyclotomic.hpp"
#include "cyloops/rational.hpp"

namespace cyloops::testing {

inline Rational random_rational(std::mt19937_64& rng, std::int64_t span = 50, std::int64_t max_den = 30) {
  std::uniform_int_distribution<std::int64_t> num(-span, span);
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Cyclotomic random_cyclotomic(std::mt19937_64& rng) {
  return {random_rational(rng), random_rational(rng)};
}

}  // namespace cyloops::testing
