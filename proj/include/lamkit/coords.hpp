// Coordinates for integral laminations on the n-punctured disk.
//
// The disk D_n carries n punctures on a horizontal axis.  The reference arcs
// are: for each inner puncture k (2 <= k <= n-1) an arc from the puncture up
// to the boundary and one down to the boundary (alpha_1 .. alpha_{2n-4}, odd
// indices up, even indices down), and between consecutive punctures i, i+1 a
// vertical arc beta_i (1 <= i <= n-1) with both ends on the boundary.
//
// The "strip" S_i (1 <= i <= n-2) is the region between beta_i and beta_{i+1};
// it contains puncture i+1 and is divided by alpha_{2i-1} and alpha_{2i}.
//
// A lamination is encoded two ways:
//  * triangle coordinates: the intersection counts with every alpha and beta
//    arc of a taut (minimally intersecting) representative;
//  * Dynnikov coordinates: the half-differences
//        a_i = (alpha_{2i} - alpha_{2i-1}) / 2,
//        b_i = (beta_i - beta_{i+1}) / 2,
//    which identify the set of laminations with Z^{2n-4} minus the origin.
// Conversions in both directions are exact and inverse to each other.

#pragma once

#include <string>
#include <vector>

#include "lamkit/checked.hpp"

namespace lamkit {

// Number of punctures; the coordinate systems need at least 3.
class PunctureCount {
 public:
  explicit PunctureCount(int n);
  int value() const noexcept { return n_; }

  friend bool operator==(PunctureCount lhs, PunctureCount rhs) noexcept {
    return lhs.n_ == rhs.n_;
  }
  friend bool operator!=(PunctureCount lhs, PunctureCount rhs) noexcept {
    return lhs.n_ != rhs.n_;
  }

 private:
  int n_;
};

// Intersection counts (alpha_1..alpha_{2n-4}; beta_1..beta_{n-1}) of a taut
// representative with the reference arcs.  The constructor checks lengths
// only; whether the counts describe a lamination is validate_triangle's job.
struct TriangleCoords {
  TriangleCoords(PunctureCount n, std::vector<Coord> alpha, std::vector<Coord> beta);

  PunctureCount n;
  std::vector<Coord> alpha;  // size 2n-4
  std::vector<Coord> beta;   // size n-1

  bool operator==(const TriangleCoords& other) const = default;
};

// Dynnikov coordinates (a_1..a_{n-2}, b_1..b_{n-2}).  Any value other than the
// zero vector corresponds to exactly one lamination.
struct DynnikovCoords {
  DynnikovCoords(PunctureCount n, std::vector<Coord> a, std::vector<Coord> b);

  PunctureCount n;
  std::vector<Coord> a;  // size n-2
  std::vector<Coord> b;  // size n-2

  bool is_zero() const noexcept;
  bool operator==(const DynnikovCoords& other) const = default;
};

// One violated validity condition, with the 1-based strip/arc index it refers
// to (-1 for conditions about the vector as a whole).
struct Violation {
  std::string invariant;
  int index;
  std::string detail;

  bool operator==(const Violation& other) const = default;
};

// Thrown by operations that require valid triangle coordinates.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Checks every condition characterising triangle coordinate vectors of
// laminations and returns all failures (empty result = valid):
//  * "negative_entry":      every count is >= 0;
//  * "beta_odd":            every beta_i is even;
//  * "strip_sum_mismatch":  alpha_{2i-1} + alpha_{2i} = max(beta_i, beta_{i+1});
//  * "strip_slack":         alpha_{2i-1} >= |b_i| and alpha_{2i} >= |b_i|;
//  * "min_m_nonzero":       some strip has no strand between the two alpha
//                           arcs (min_i m_i = 0); otherwise the innermost
//                           curve would be parallel to the boundary;
//  * "zero_vector":         not all counts are zero.
std::vector<Violation> validate_triangle(const TriangleCoords& t);

// Halved differences of a valid triangle vector.  Throws ValidationError
// (carrying the full violation list) if t is not valid.
DynnikovCoords dynnikov_from_triangle(const TriangleCoords& t);

// Inverse of dynnikov_from_triangle.  Defined for every nonzero vector; the
// result always passes validate_triangle.  Throws std::invalid_argument for
// the zero vector.
TriangleCoords triangle_from_dynnikov(const DynnikovCoords& d);

enum class LoopSide { None, Left, Right };

// Per-strip census of a valid triangle vector.  In strip S_i a taut
// representative has only four kinds of path component:
//   above:      beta_i -> beta_{i+1}, passing above the puncture;
//   below:      beta_i -> beta_{i+1}, passing below;
//   loops:      both ends on beta_i (right loops, b_i > 0) or both ends on
//               beta_{i+1} (left loops, b_i < 0), wrapping the puncture.
struct StripStats {
  int index;       // strip index i, 1-based
  Coord b;         // (beta_i - beta_{i+1}) / 2; |b| is the loop count
  LoopSide side;   // which side the loops open towards (None if b == 0)
  Coord above;     // alpha_{2i-1} - |b|
  Coord below;     // alpha_{2i} - |b|
  Coord m;         // min(above, below)
  Coord x;         // |alpha_{2i} - alpha_{2i-1}|, always 2|a_i|

  bool operator==(const StripStats& other) const = default;
};

// Stats for strip i (1 <= i <= n-2) of a valid t.  Throws std::out_of_range
// for a bad index.
StripStats strip_stats(const TriangleCoords& t, int i);

}  // namespace lamkit
