// Geometric intersection numbers from coordinates, without isotoping curves.
//
// A "relaxed" curve C_ij is the round curve enclosing exactly punctures
// i..j.  Every essential simple closed curve that encloses a contiguous run
// of punctures is isotopic to exactly one C_ij with 1 <= i < j <= n and
// (i, j) != (1, n) (a curve around all punctures is boundary-parallel).
//
// intersect_relaxed computes i(L, C_ij) for any lamination L given in
// triangle coordinates, by counting the crossings with a representative of
// C_ij that runs along beta_{i-1} and beta_j and then discounting the path
// components of L that can be isotoped off it.  intersect_d3 computes
// i(L1, L2) for arbitrary pairs on the 3-punctured disk.

#pragma once

#include <vector>

#include "lamkit/coords.hpp"

namespace lamkit {

// The curve enclosing punctures i..j, in its relaxed (round) position.
struct RelaxedCurve {
  RelaxedCurve(PunctureCount n, int i, int j);

  PunctureCount n;
  int i;
  int j;

  bool operator==(const RelaxedCurve& other) const = default;
};

// Dynnikov coordinates of C_ij: all a_k zero, b_{i-1} = -1 (if i > 1) and
// b_{j-1} = +1 (if j < n), everything else zero.
DynnikovCoords relaxed_curve_dynnikov(const RelaxedCurve& c);

// Numbers of strands of a lamination that cross a whole run of strips in one
// pass: "above" passes over every puncture of strips i..j, "below" under.
struct SpanCounts {
  Coord above;  // min over the run of (alpha_{2k-1} - |b_k|)
  Coord below;  // min over the run of (alpha_{2k} - |b_k|)
  Coord sum;    // above + below

  bool operator==(const SpanCounts& other) const = default;
};

// Span counts for strips i..j (1 <= i <= j <= n-2) of a valid t.  Throws
// std::out_of_range for a bad range.
SpanCounts span_counts(const TriangleCoords& t, int i, int j);

// i(L, C_ij) for valid triangle coordinates t of L.  Exact; result is even
// and nonnegative.  Throws std::invalid_argument if t and c disagree on n.
Coord intersect_relaxed(const TriangleCoords& t, const RelaxedCurve& c);

// A disjoint union of relaxed curves with multiplicities.  Construction
// rejects families with crossing (linked) intervals, since those cannot be
// realised disjointly; equal intervals are merged into one multiplicity.
struct IntervalFamily {
  struct Component {
    int i;
    int j;
    Coord mult;

    bool operator==(const Component& other) const = default;
  };

  IntervalFamily(PunctureCount n, std::vector<Component> components);

  PunctureCount n;
  std::vector<Component> components;  // sorted by (i, j), multiplicities >= 1

  bool operator==(const IntervalFamily& other) const = default;
};

// Sum of intersect_relaxed over the family, weighted by multiplicity.
Coord intersect_relaxed_family(const TriangleCoords& t, const IntervalFamily& f);

// i(L1, L2) on the 3-punctured disk, for valid triangle coordinates.  The
// two loop directions (sign of b_1) select between a difference and a sum of
// the cross products of alpha counts; when either sign is zero the branches
// coincide.
Coord intersect_d3(const TriangleCoords& t1, const TriangleCoords& t2);

}  // namespace lamkit
