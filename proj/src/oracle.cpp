#include "lamkit/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <stdexcept>

#include "lamkit/random.hpp"

namespace lamkit {

namespace {

// Per-strip strand census plus which side the loops hang off.
struct StripProfile {
  Coord above = 0;
  Coord below = 0;
  Coord loops = 0;
  LoopSide side = LoopSide::None;
};

struct Point {
  int arc;     // 1..n-1
  Coord lane;  // 1..beta[arc]
  bool operator==(const Point& other) const = default;
};

// The diagram as pairings: each crossing point has one partner through the
// region on each side of its arc.
class Pairings {
 public:
  explicit Pairings(const TriangleCoords& t) : n_(t.n.value()), beta_(t.beta) {
    strips_.resize(n_ - 1);  // 1-based, strips 1..n-2
    for (int k = 1; k <= n_ - 2; ++k) {
      const StripStats s = strip_stats(t, k);
      strips_[k] = {s.above, s.below, checked_abs(s.b), s.side};
    }
  }

  Coord beta(int arc) const { return beta_[arc - 1]; }
  int punctures() const { return n_; }
  const StripProfile& strip(int k) const { return strips_[k]; }

  // Partner of p through the region to the given side of p's arc, plus the
  // transit this passage records.
  struct Step {
    Point to;
    Transit transit;
  };

  Step through_right(Point p) const {
    if (p.arc == n_ - 1) {  // right end region: nested wraps of puncture n
      return {{p.arc, beta(p.arc) + 1 - p.lane}, {n_ - 1, TransitKind::RightLoop, p.lane}};
    }
    const int k = p.arc;  // strip k lies right of beta_k
    const StripProfile& s = strips_[k];
    const Coord loop_band = s.side == LoopSide::Right ? 2 * s.loops : 0;
    if (p.lane <= s.above)
      return {{k + 1, p.lane}, {k, TransitKind::Above, p.lane}};
    if (p.lane <= s.above + loop_band)
      return {{k, 2 * s.above + loop_band + 1 - p.lane}, {k, TransitKind::RightLoop, p.lane}};
    return {{k + 1, beta(k + 1) - beta(k) + p.lane}, {k, TransitKind::Below, p.lane}};
  }

  Step through_left(Point p) const {
    if (p.arc == 1) {  // left end region: nested wraps of puncture 1
      return {{1, beta(1) + 1 - p.lane}, {0, TransitKind::LeftLoop, p.lane}};
    }
    const int k = p.arc - 1;  // strip k lies left of beta_{k+1}
    const StripProfile& s = strips_[k];
    const Coord loop_band = s.side == LoopSide::Left ? 2 * s.loops : 0;
    if (p.lane <= s.above)
      return {{k, p.lane}, {k, TransitKind::Above, p.lane}};
    if (p.lane <= s.above + loop_band)
      return {{k + 1, 2 * s.above + loop_band + 1 - p.lane}, {k, TransitKind::LeftLoop, p.lane}};
    return {{k, beta(k) - beta(k + 1) + p.lane}, {k, TransitKind::Below, p.lane}};
  }

 private:
  int n_;
  std::vector<Coord> beta_;
  std::vector<StripProfile> strips_;
};

bool intervals_link(int i1, int j1, int i2, int j2) {
  const bool overlap = std::max(i1, i2) <= std::min(j1, j2);
  const bool nested = (i1 <= i2 && j2 <= j1) || (i2 <= i1 && j1 <= j2);
  return overlap && !nested;
}

}  // namespace

CurveDiagram reconstruct(const TriangleCoords& t) {
  auto violations = validate_triangle(t);
  if (!violations.empty()) throw ValidationError(std::move(violations));

  const int n = t.n.value();
  Coord total_points = 0;
  std::vector<Coord> offset(n, 0);  // offset[arc-1] = first point id of that arc
  for (int arc = 1; arc <= n - 1; ++arc) {
    offset[arc - 1] = total_points;
    total_points = checked_add(total_points, t.beta[arc - 1]);
  }
  constexpr Coord kMaxPoints = 20'000'000;
  if (total_points > kMaxPoints)
    throw std::length_error("lamination too large to reconstruct explicitly");

  const Pairings pairings(t);
  auto point_id = [&](Point p) { return offset[p.arc - 1] + p.lane - 1; };

  std::vector<bool> visited(static_cast<size_t>(total_points), false);
  CurveDiagram diagram{t.n, {}};

  for (int arc = 1; arc <= n - 1; ++arc) {
    for (Coord lane = 1; lane <= t.beta[arc - 1]; ++lane) {
      const Point start{arc, lane};
      if (visited[point_id(start)]) continue;

      // Follow the strand rightwards from its topmost-leftmost point until it
      // comes back; each passage through a region is one transit.
      std::vector<Transit> component;
      Point at = start;
      bool heading_right = true;
      do {
        visited[point_id(at)] = true;
        const Pairings::Step step =
            heading_right ? pairings.through_right(at) : pairings.through_left(at);
        component.push_back(step.transit);
        // Loops bounce the strand back; crossings keep its direction.
        if (step.to.arc == at.arc) heading_right = !heading_right;
        at = step.to;
      } while (!(at == start));
      diagram.components.push_back(std::move(component));
    }
  }
  return diagram;
}

TriangleCoords diagram_triangle(const CurveDiagram& d) {
  const int n = d.n.value();
  std::vector<Coord> beta(n - 1, 0);
  std::vector<Coord> above(n - 1, 0), below(n - 1, 0), loops(n - 1, 0);  // strips 1..n-2

  for (const std::vector<Transit>& component : d.components) {
    if (component.empty()) throw std::invalid_argument("empty component in diagram");
    const size_t m = component.size();
    for (size_t idx = 0; idx < m; ++idx) {
      const Transit& tr = component[idx];
      const Transit& prev = component[(idx + m - 1) % m];
      if (tr.region < 0 || tr.region > n - 1 || std::abs(tr.region - prev.region) != 1)
        throw std::invalid_argument("transit regions do not chain through adjacent regions");
      // Consecutive transits share the arc between their regions.
      const int entry_arc = std::max(tr.region, prev.region);
      beta[entry_arc - 1] = checked_add(beta[entry_arc - 1], 1);
      if (tr.region >= 1 && tr.region <= n - 2) {
        switch (tr.kind) {
          case TransitKind::Above:
            above[tr.region] = checked_add(above[tr.region], 1);
            break;
          case TransitKind::Below:
            below[tr.region] = checked_add(below[tr.region], 1);
            break;
          default:
            loops[tr.region] = checked_add(loops[tr.region], 1);
            break;
        }
      } else if ((tr.region == 0 && tr.kind != TransitKind::LeftLoop) ||
                 (tr.region == n - 1 && tr.kind != TransitKind::RightLoop)) {
        throw std::invalid_argument("end regions admit only wraps of the end puncture");
      }
    }
  }

  std::vector<Coord> alpha(2 * n - 4, 0);
  for (int k = 1; k <= n - 2; ++k) {
    alpha[2 * k - 2] = checked_add(above[k], loops[k]);
    alpha[2 * k - 1] = checked_add(below[k], loops[k]);
  }
  return TriangleCoords(d.n, std::move(alpha), std::move(beta));
}

Coord open_components_in_range(const CurveDiagram& d, int i, int j) {
  const int n = d.n.value();
  if (i < 1 || j > n - 2 || i > j) throw std::out_of_range("strip range out of range");

  Coord open = 0;
  for (const std::vector<Transit>& component : d.components) {
    const size_t m = component.size();
    auto in_range = [&](size_t idx) {
      return component[idx].region >= i && component[idx].region <= j;
    };
    // Each maximal run of in-range transits is one piece of the restriction;
    // a component with no out-of-range transit stays a closed curve.
    for (size_t idx = 0; idx < m; ++idx)
      if (!in_range(idx) && in_range((idx + 1) % m)) open = checked_add(open, 1);
  }
  return open;
}

TriangleCoords family_triangle(const IntervalFamily& f) {
  if (f.components.empty())
    throw std::invalid_argument("an empty family describes no lamination");

  const int n = f.n.value();
  std::vector<Coord> alpha(2 * n - 4, 0), beta(n - 1, 0);
  for (const IntervalFamily::Component& c : f.components) {
    const TriangleCoords one =
        triangle_from_dynnikov(relaxed_curve_dynnikov(RelaxedCurve(f.n, c.i, c.j)));
    for (size_t idx = 0; idx < alpha.size(); ++idx)
      alpha[idx] = checked_add(alpha[idx], checked_mul(c.mult, one.alpha[idx]));
    for (size_t idx = 0; idx < beta.size(); ++idx)
      beta[idx] = checked_add(beta[idx], checked_mul(c.mult, one.beta[idx]));
  }

  TriangleCoords t(f.n, std::move(alpha), std::move(beta));
  assert(validate_triangle(t).empty());
  return t;
}

Coord linking_intersection(const IntervalFamily& f, const RelaxedCurve& c) {
  if (f.n != c.n) throw std::invalid_argument("dimension mismatch: puncture counts differ");
  Coord crossers = 0;
  for (const IntervalFamily::Component& comp : f.components)
    if (intervals_link(comp.i, comp.j, c.i, c.j)) crossers = checked_add(crossers, comp.mult);
  return checked_mul(2, crossers);
}

IntervalFamily random_family(PunctureCount n, int max_components, std::uint64_t seed) {
  if (max_components < 1)
    throw std::invalid_argument("max_components must be at least 1: empty families are invalid");

  std::mt19937_64 rng(seed);
  const int nv = n.value();
  const std::uint64_t target = 1 + bounded(rng, static_cast<std::uint64_t>(max_components));

  std::vector<IntervalFamily::Component> accepted;
  std::uint64_t attempts = 0;
  const std::uint64_t attempt_budget = 64 * target + 64;
  while (accepted.size() < target && (attempts < attempt_budget || accepted.empty())) {
    ++attempts;
    int i = 1 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(nv)));
    int j = 1 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(nv)));
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    if (i == 1 && j == nv) continue;
    const bool compatible =
        std::none_of(accepted.begin(), accepted.end(), [&](const IntervalFamily::Component& c) {
          return intervals_link(c.i, c.j, i, j);
        });
    if (compatible) accepted.push_back({i, j, 1});
  }
  return IntervalFamily(n, std::move(accepted));
}

}  // namespace lamkit
