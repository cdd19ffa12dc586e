// Overflow-checked signed 64-bit arithmetic.
//
// All coordinate arithmetic in lamkit goes through these helpers.  Coordinates
// are exact integers; silently wrapping around would corrupt results, so every
// add/subtract/multiply either returns the exact value or throws OverflowError.

#pragma once

#include <cstdint>
#include <stdexcept>

namespace lamkit {

// Coordinate value: intersection counts and their differences.
using Coord = std::int64_t;

// Thrown when a computation would leave the representable range of Coord.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const char* what) : std::overflow_error(what) {}
};

inline Coord checked_add(Coord x, Coord y) {
  Coord r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Coord checked_sub(Coord x, Coord y) {
  Coord r;
  if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Coord checked_mul(Coord x, Coord y) {
  Coord r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Coord checked_neg(Coord x) { return checked_sub(0, x); }

inline Coord checked_abs(Coord x) { return x < 0 ? checked_neg(x) : x; }

// x/2 for values known to be even; the parity is a caller-checked invariant.
inline Coord exact_half(Coord x) { return x / 2; }

}  // namespace lamkit
