// Ground-truth machinery that rebuilds laminations explicitly, used to
// cross-check the coordinate formulas and to drive the renderer.
//
// reconstruct() turns a valid triangle vector back into a concrete curve
// diagram.  On each arc the crossing points are numbered 1..beta from the
// top ("lanes"), and tautness forces the strands into bands: through-strands
// passing above the puncture take the topmost lanes in order, those passing
// below take the bottommost, and loops nest in the middle band with the
// innermost loop on the centremost lane pair.  In the two end regions every
// strand wraps the end puncture, so lanes pair top-to-bottom (lane p with
// lane beta+1-p).  Strands glue across an arc lane-to-lane, which determines
// the diagram completely; components fall out by following the strands.

#pragma once

#include <cstdint>
#include <vector>

#include "lamkit/coords.hpp"
#include "lamkit/intersection.hpp"

namespace lamkit {

enum class TransitKind { Above, Below, LeftLoop, RightLoop };

// One passage of a strand through a region, recorded with the region (0 for
// the left end region, 1..n-2 for strips, n-1 for the right end region), the
// kind of path it takes there, and the lane through which it enters.
struct Transit {
  int region;
  TransitKind kind;
  Coord lane;

  bool operator==(const Transit& other) const = default;
};

// A lamination as an explicit diagram: one cyclic transit sequence per
// component.  Components are listed in order of their topmost-leftmost
// crossing point, each starting there and heading right.
struct CurveDiagram {
  PunctureCount n;
  std::vector<std::vector<Transit>> components;

  bool operator==(const CurveDiagram& other) const = default;
};

// Builds the diagram of a valid t.  Throws ValidationError if t is invalid,
// std::length_error if the diagram would need an absurd number of strands.
CurveDiagram reconstruct(const TriangleCoords& t);

// Recounts the arc crossings of a diagram.  For d = reconstruct(t) this
// returns exactly t; used as a fidelity check.
TriangleCoords diagram_triangle(const CurveDiagram& d);

// Number of path components (pieces that are not closed curves) that the
// diagram's strands form when restricted to strips i..j.
Coord open_components_in_range(const CurveDiagram& d, int i, int j);

// Triangle coordinates of a disjoint union of relaxed curves: the taut
// representatives are simultaneously taut, so the counts add componentwise.
// Throws std::invalid_argument for an empty family.
TriangleCoords family_triangle(const IntervalFamily& f);

// Intersection number of a family with one relaxed curve, computed from
// first principles: two intervals of punctures force exactly two crossings
// when they overlap without either containing the other, and none otherwise.
Coord linking_intersection(const IntervalFamily& f, const RelaxedCurve& c);

// Deterministic pseudorandom laminar family with between 1 and
// max_components components: candidate intervals are drawn uniformly and
// kept when nested-or-disjoint with everything accepted so far.
IntervalFamily random_family(PunctureCount n, int max_components, std::uint64_t seed);

}  // namespace lamkit
