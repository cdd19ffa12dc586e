#include "lamkit/intersection.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <tuple>

namespace lamkit {

namespace {

void check_curve_indices(int n, int i, int j) {
  if (i < 1 || j > n || i >= j)
    throw std::invalid_argument("relaxed curve needs 1 <= i < j <= n");
  if (i == 1 && j == n)
    throw std::invalid_argument("the curve around all punctures is boundary-parallel");
}

void check_same_n(PunctureCount a, PunctureCount b) {
  if (a != b) throw std::invalid_argument("dimension mismatch: puncture counts differ");
}

// Strands that turn around one end of the interval i..j and run back, so that
// they enclose exactly the interval's punctures.  Such a strand needs a loop
// to turn in (`cap_slots`, with `cap_above`/`cap_below` lanes of the turning
// strip already taken by its own through-strands) and must pass above and
// below every other puncture of the interval (`pass`).  Nothing separates it
// from the relaxed curve, so each one sheds two crossings.
Coord wrap_count(Coord cap_slots, Coord cap_above, Coord cap_below, const SpanCounts& pass) {
  const Coord by_above = checked_sub(pass.above, cap_above);
  const Coord by_below = checked_sub(pass.below, cap_below);
  return std::max<Coord>(0, std::min({cap_slots, by_above, by_below}));
}

}  // namespace

RelaxedCurve::RelaxedCurve(PunctureCount n_in, int i_in, int j_in) : n(n_in), i(i_in), j(j_in) {
  check_curve_indices(n.value(), i, j);
}

DynnikovCoords relaxed_curve_dynnikov(const RelaxedCurve& c) {
  const int n = c.n.value();
  std::vector<Coord> a(n - 2, 0), b(n - 2, 0);
  if (c.i > 1) b[c.i - 2] = -1;
  if (c.j < n) b[c.j - 2] = 1;
  return DynnikovCoords(c.n, std::move(a), std::move(b));
}

SpanCounts span_counts(const TriangleCoords& t, int i, int j) {
  const int n = t.n.value();
  if (i < 1 || j > n - 2 || i > j) throw std::out_of_range("strip range out of range");
  SpanCounts s{0, 0, 0};
  for (int k = i; k <= j; ++k) {
    const Coord half_b = exact_half(checked_sub(t.beta[k - 1], t.beta[k]));
    const Coord above = checked_sub(t.alpha[2 * k - 2], checked_abs(half_b));
    const Coord below = checked_sub(t.alpha[2 * k - 1], checked_abs(half_b));
    s.above = (k == i) ? above : std::min(s.above, above);
    s.below = (k == i) ? below : std::min(s.below, below);
  }
  s.sum = checked_add(s.above, s.below);
  return s;
}

Coord intersect_relaxed(const TriangleCoords& t, const RelaxedCurve& c) {
  check_same_n(t.n, c.n);
  const int n = t.n.value();
  const int i = c.i;
  const int j = c.j;

  // Crossings with a representative of C_ij running along beta_{i-1} and
  // beta_j: every non-closed path component of L between those arcs crosses
  // it twice, giving beta_{i-1} + beta_j crossings in total.
  const Coord beta_left = i > 1 ? t.beta[i - 2] : 0;
  const Coord beta_right = j < n ? t.beta[j - 1] : 0;
  Coord total = checked_add(beta_left, beta_right);

  // Components that pass above or below the whole interval slide off over the
  // top or bottom of the curve.  They need an endpoint on each bounding arc,
  // so there are none when the interval reaches the boundary of the disk.
  if (i > 1 && j < n) total = checked_sub(total, checked_mul(2, span_counts(t, i - 1, j - 1).sum));

  // Components that enclose exactly punctures i..j also slide off: they enter
  // through one bounding arc, turn around the far end of the interval, and
  // run back.  The turn is a loop of the last strip inside the interval, or a
  // loop around the end puncture when the interval reaches the disk boundary.
  Coord wrap_from_left = 0;  // both endpoints on beta_{i-1}, turning around puncture j
  if (i > 1) {
    const SpanCounts pass = span_counts(t, i - 1, j == n ? n - 2 : j - 2);
    if (j == n) {
      wrap_from_left = wrap_count(exact_half(t.beta[n - 2]), 0, 0, pass);
    } else {
      const StripStats turn = strip_stats(t, j - 1);
      if (turn.side == LoopSide::Right)
        wrap_from_left = wrap_count(turn.b, turn.above, turn.below, pass);
    }
  }
  Coord wrap_from_right = 0;  // both endpoints on beta_j, turning around puncture i
  if (j < n) {
    const SpanCounts pass = span_counts(t, i == 1 ? 1 : i, j - 1);
    if (i == 1) {
      wrap_from_right = wrap_count(exact_half(t.beta[0]), 0, 0, pass);
    } else {
      const StripStats turn = strip_stats(t, i - 1);
      if (turn.side == LoopSide::Left)
        wrap_from_right = wrap_count(checked_neg(turn.b), turn.above, turn.below, pass);
    }
  }
  // Both kinds at once would exhibit two crossing components inside one
  // lamination, which disjointness rules out.
  assert(wrap_from_left == 0 || wrap_from_right == 0);
  total = checked_sub(total, checked_mul(2, checked_add(wrap_from_left, wrap_from_right)));

  assert(total >= 0 && total % 2 == 0);
  return total;
}

IntervalFamily::IntervalFamily(PunctureCount n_in, std::vector<Component> components_in)
    : n(n_in), components(std::move(components_in)) {
  const int nv = n.value();
  for (const Component& c : components) {
    check_curve_indices(nv, c.i, c.j);
    if (c.mult < 1) throw std::invalid_argument("component multiplicity must be at least 1");
  }
  std::sort(components.begin(), components.end(),
            [](const Component& a, const Component& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });

  // Merge equal intervals, then check that the rest are pairwise nested or
  // disjoint with a stack sweep: in (i asc, j desc) order, an interval must
  // fit inside the innermost open interval that overlaps it.
  std::vector<Component> merged;
  for (const Component& c : components) {
    if (!merged.empty() && merged.back().i == c.i && merged.back().j == c.j)
      merged.back().mult = checked_add(merged.back().mult, c.mult);
    else
      merged.push_back(c);
  }
  components = std::move(merged);

  // Sweep in (i asc, j desc) order so enclosing intervals open first; the
  // canonical (i asc, j asc) order of `components` stays untouched.
  std::vector<Component> sweep = components;
  std::sort(sweep.begin(), sweep.end(), [](const Component& a, const Component& b) {
    return a.i != b.i ? a.i < b.i : a.j > b.j;
  });
  std::vector<Component> stack;  // open intervals, innermost last
  for (const Component& c : sweep) {
    while (!stack.empty() && stack.back().j < c.i) stack.pop_back();
    if (!stack.empty() && stack.back().j < c.j)
      throw std::invalid_argument("family is not laminar: intervals [" + std::to_string(stack.back().i) +
                                  "," + std::to_string(stack.back().j) + "] and [" +
                                  std::to_string(c.i) + "," + std::to_string(c.j) + "] cross");
    stack.push_back(c);
  }
}

Coord intersect_relaxed_family(const TriangleCoords& t, const IntervalFamily& f) {
  check_same_n(t.n, f.n);
  Coord total = 0;
  for (const IntervalFamily::Component& c : f.components)
    total = checked_add(total, checked_mul(c.mult, intersect_relaxed(t, RelaxedCurve(f.n, c.i, c.j))));
  return total;
}

Coord intersect_d3(const TriangleCoords& t1, const TriangleCoords& t2) {
  if (t1.n.value() != 3 || t2.n.value() != 3)
    throw std::invalid_argument("intersect_d3 is specific to the 3-punctured disk");

  const Coord cross1 = checked_mul(t1.alpha[1], t2.alpha[0]);  // alpha^1_2 * alpha^2_1
  const Coord cross2 = checked_mul(t1.alpha[0], t2.alpha[1]);  // alpha^1_1 * alpha^2_2
  const Coord same_side = checked_abs(checked_sub(cross1, cross2));
  const Coord opposite_side = checked_add(cross1, cross2);

  const Coord d1 = checked_sub(t1.beta[0], t1.beta[1]);  // sign of b_1 for t1
  const Coord d2 = checked_sub(t2.beta[0], t2.beta[1]);
  if (d1 > 0 && d2 > 0) return same_side;
  if (d1 < 0 && d2 < 0) return same_side;
  if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) return opposite_side;

  // One lamination has no loops (b_1 = 0); validity then forces one of its
  // alpha counts to zero, so the two branches agree.
  if (same_side != opposite_side)
    throw std::logic_error("loop-free lamination with disagreeing branches; coordinates invalid?");
  return same_side;
}

}  // namespace lamkit
