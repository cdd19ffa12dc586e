#include "lamkit/coords.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lamkit {

namespace {

std::string index_name(const char* base, int i) {
  return std::string(base) + "[" + std::to_string(i) + "]";
}

std::string describe(const std::vector<Violation>& violations) {
  std::string msg = "invalid triangle coordinates:";
  for (const Violation& v : violations) msg += " [" + v.invariant + ": " + v.detail + "]";
  return msg;
}

}  // namespace

PunctureCount::PunctureCount(int n) : n_(n) {
  if (n < 3) throw std::invalid_argument("puncture count must be at least 3");
}

TriangleCoords::TriangleCoords(PunctureCount n_in, std::vector<Coord> alpha_in,
                               std::vector<Coord> beta_in)
    : n(n_in), alpha(std::move(alpha_in)), beta(std::move(beta_in)) {
  const size_t want_alpha = static_cast<size_t>(2 * n.value() - 4);
  const size_t want_beta = static_cast<size_t>(n.value() - 1);
  if (alpha.size() != want_alpha)
    throw std::invalid_argument("triangle coordinates need 2n-4 alpha entries");
  if (beta.size() != want_beta)
    throw std::invalid_argument("triangle coordinates need n-1 beta entries");
}

DynnikovCoords::DynnikovCoords(PunctureCount n_in, std::vector<Coord> a_in,
                               std::vector<Coord> b_in)
    : n(n_in), a(std::move(a_in)), b(std::move(b_in)) {
  const size_t want = static_cast<size_t>(n.value() - 2);
  if (a.size() != want || b.size() != want)
    throw std::invalid_argument("Dynnikov coordinates need n-2 entries in each of a and b");
}

bool DynnikovCoords::is_zero() const noexcept {
  auto zero = [](Coord v) { return v == 0; };
  return std::all_of(a.begin(), a.end(), zero) && std::all_of(b.begin(), b.end(), zero);
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::invalid_argument(describe(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate_triangle(const TriangleCoords& t) {
  std::vector<Violation> out;
  const int n = t.n.value();

  bool any_nonzero = false;
  for (int i = 1; i <= 2 * n - 4; ++i) {
    const Coord v = t.alpha[i - 1];
    any_nonzero |= v != 0;
    if (v < 0)
      out.push_back({"negative_entry", i, index_name("alpha", i) + " = " + std::to_string(v)});
  }
  for (int i = 1; i <= n - 1; ++i) {
    const Coord v = t.beta[i - 1];
    any_nonzero |= v != 0;
    if (v < 0)
      out.push_back({"negative_entry", i, index_name("beta", i) + " = " + std::to_string(v)});
    if (v % 2 != 0)
      out.push_back({"beta_odd", i, index_name("beta", i) + " = " + std::to_string(v) + " is odd"});
  }

  // Strip conditions.  |b_i| is half of |beta_i - beta_{i+1}|; to stay exact
  // when a beta entry is odd, compare doubled quantities throughout.
  bool strips_clean = true;
  Coord min_m2 = 0;  // min over strips of 2*m_i
  for (int i = 1; i <= n - 2; ++i) {
    const Coord a1 = t.alpha[2 * i - 2];
    const Coord a2 = t.alpha[2 * i - 1];
    const Coord bl = t.beta[i - 1];
    const Coord br = t.beta[i];
    const Coord sum = checked_add(a1, a2);
    const Coord want = std::max(bl, br);
    if (sum != want) {
      out.push_back({"strip_sum_mismatch", i,
                     index_name("alpha", 2 * i - 1) + " + " + index_name("alpha", 2 * i) + " = " +
                         std::to_string(sum) + ", expected max(" + index_name("beta", i) + ", " +
                         index_name("beta", i + 1) + ") = " + std::to_string(want)});
      strips_clean = false;
    }
    const Coord abs_db = checked_abs(checked_sub(bl, br));  // 2|b_i|
    const Coord above2 = checked_sub(checked_mul(2, a1), abs_db);
    const Coord below2 = checked_sub(checked_mul(2, a2), abs_db);
    if (above2 < 0) {
      out.push_back({"strip_slack", i, index_name("alpha", 2 * i - 1) + " = " +
                                           std::to_string(a1) + " is less than |b_" +
                                           std::to_string(i) + "|"});
      strips_clean = false;
    }
    if (below2 < 0) {
      out.push_back({"strip_slack", i, index_name("alpha", 2 * i) + " = " + std::to_string(a2) +
                                           " is less than |b_" + std::to_string(i) + "|"});
      strips_clean = false;
    }
    const Coord m2 = std::min(above2, below2);
    min_m2 = (i == 1) ? m2 : std::min(min_m2, m2);
  }

  // Some strip must have no strand between its alpha arcs; otherwise the
  // innermost curve could be pushed onto the boundary.  Only meaningful when
  // the per-strip conditions hold, so skip it if they already failed.
  if (strips_clean && min_m2 > 0)
    out.push_back({"min_m_nonzero", -1,
                   "every strip has a strand between its alpha arcs (min m_i = " +
                       std::to_string(min_m2 / 2) + ")"});

  if (!any_nonzero) out.push_back({"zero_vector", -1, "all coordinates are zero"});

  return out;
}

DynnikovCoords dynnikov_from_triangle(const TriangleCoords& t) {
  auto violations = validate_triangle(t);
  if (!violations.empty()) throw ValidationError(std::move(violations));

  const int n = t.n.value();
  std::vector<Coord> a(n - 2), b(n - 2);
  for (int i = 1; i <= n - 2; ++i) {
    a[i - 1] = exact_half(checked_sub(t.alpha[2 * i - 1], t.alpha[2 * i - 2]));
    b[i - 1] = exact_half(checked_sub(t.beta[i - 1], t.beta[i]));
  }
  return DynnikovCoords(t.n, std::move(a), std::move(b));
}

TriangleCoords triangle_from_dynnikov(const DynnikovCoords& d) {
  if (d.is_zero())
    throw std::invalid_argument("the zero vector does not describe a lamination");

  const int n = d.n.value();

  // beta_i/2 = max_k(|a_k| + max(b_k, 0) + sum_{m<k} b_m) - sum_{m<i} b_m.
  Coord prefix = 0;  // sum of b_1..b_{k-1}
  Coord peak = 0;
  for (int k = 1; k <= n - 2; ++k) {
    const Coord c =
        checked_add(checked_add(checked_abs(d.a[k - 1]), std::max<Coord>(d.b[k - 1], 0)), prefix);
    peak = (k == 1) ? c : std::max(peak, c);
    prefix = checked_add(prefix, d.b[k - 1]);
  }

  std::vector<Coord> beta(n - 1);
  prefix = 0;
  for (int i = 1; i <= n - 1; ++i) {
    beta[i - 1] = checked_mul(2, checked_sub(peak, prefix));
    if (i <= n - 2) prefix = checked_add(prefix, d.b[i - 1]);
  }

  // In strip i the loops hang off the larger of the two bounding betas, which
  // is beta_i when b_i >= 0 and beta_{i+1} when b_i <= 0; the alpha counts are
  // a_i away from half of that value on either side.
  std::vector<Coord> alpha(2 * n - 4);
  for (int i = 1; i <= n - 2; ++i) {
    const Coord half = exact_half(d.b[i - 1] >= 0 ? beta[i - 1] : beta[i]);
    assert(d.b[i - 1] != 0 || beta[i - 1] == beta[i]);
    alpha[2 * i - 2] = checked_sub(half, d.a[i - 1]);
    alpha[2 * i - 1] = checked_add(half, d.a[i - 1]);
  }

  TriangleCoords t(d.n, std::move(alpha), std::move(beta));
  assert(validate_triangle(t).empty());
  return t;
}

StripStats strip_stats(const TriangleCoords& t, int i) {
  const int n = t.n.value();
  if (i < 1 || i > n - 2) throw std::out_of_range("strip index out of range");
  const Coord a1 = t.alpha[2 * i - 2];
  const Coord a2 = t.alpha[2 * i - 1];
  const Coord b = exact_half(checked_sub(t.beta[i - 1], t.beta[i]));
  StripStats s;
  s.index = i;
  s.b = b;
  s.side = b == 0 ? LoopSide::None : (b > 0 ? LoopSide::Right : LoopSide::Left);
  s.above = checked_sub(a1, checked_abs(b));
  s.below = checked_sub(a2, checked_abs(b));
  s.m = std::min(s.above, s.below);
  s.x = checked_abs(checked_sub(a2, a1));
  return s;
}

}  // namespace lamkit
