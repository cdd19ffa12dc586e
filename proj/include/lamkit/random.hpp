// Seed-stable randomness helpers for fuzzing and test-data generation.
//
// Library distributions (std::uniform_int_distribution) may produce
// different streams on different standard libraries, so everything here
// draws from std::mt19937_64 through a hand-rolled rejection sampler: the
// same seed gives the same values on every platform.

#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "lamkit/coords.hpp"

namespace lamkit {

// Statistically independent value derived from x; useful for spreading one
// user seed over many trials.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform value in [0, m), m >= 1, by rejecting the biased tail.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t m) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % m;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % m;
}

// Uniform entry in [-bound, bound].
inline Coord bounded_coord(std::mt19937_64& rng, Coord bound) {
  const std::uint64_t width = 2 * static_cast<std::uint64_t>(bound) + 1;
  return static_cast<Coord>(bounded(rng, width)) - bound;
}

// Uniform nonzero reduced coordinate vector with entries in [-bound, bound].
inline DynnikovCoords random_dynnikov(std::mt19937_64& rng, PunctureCount n, Coord bound) {
  const std::size_t len = static_cast<std::size_t>(n.value() - 2);
  std::vector<Coord> a(len), b(len);
  for (;;) {
    bool all_zero = true;
    for (auto& v : a) {
      v = bounded_coord(rng, bound);
      all_zero = all_zero && v == 0;
    }
    for (auto& v : b) {
      v = bounded_coord(rng, bound);
      all_zero = all_zero && v == 0;
    }
    if (!all_zero) return DynnikovCoords(n, std::move(a), std::move(b));
  }
}

}  // namespace lamkit
