// Acceptance checks: the golden examples and the large property sweeps that
// gate a release.  Prints one PASS/FAIL line per criterion; the exit code is
// the number of failed criteria.
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <string>

#include <lamkit/coords.hpp>
#include <lamkit/intersection.hpp>
#include <lamkit/oracle.hpp>
#include <lamkit/random.hpp>

using namespace lamkit;

namespace {

int failures = 0;

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

void report(int index, const char* title, bool ok, double elapsed_ms) {
    std::printf("%s  %d. %s  [%.1f ms]\n", ok ? "PASS" : "FAIL", index, title, elapsed_ms);
    if (!ok) ++failures;
}

TriangleCoords sample_d5() {
    return TriangleCoords(PunctureCount(5), {2, 6, 3, 5, 4, 4}, {4, 8, 8, 4});
}

TriangleCoords round_curve_triangle(PunctureCount n, int i, int j) {
    return triangle_from_dynnikov(relaxed_curve_dynnikov(RelaxedCurve(n, i, j)));
}

void criterion_1() {
    const TriangleCoords t = sample_d5();
    (void)dynnikov_from_triangle(t);  // warm up
    const auto start = std::chrono::steady_clock::now();
    const DynnikovCoords d = dynnikov_from_triangle(t);
    const TriangleCoords back = triangle_from_dynnikov(d);
    const double elapsed = ms_since(start);
    const bool ok = d.a == std::vector<Coord>{2, 1, 0} && d.b == std::vector<Coord>{-2, 0, 2} &&
                    back == t && elapsed < 1.0;
    report(1, "5-puncture sample converts both ways exactly, under 1 ms", ok, elapsed);
}

void criterion_2() {
    const TriangleCoords t = sample_d5();
    const RelaxedCurve c(t.n, 2, 4);
    (void)intersect_relaxed(t, c);  // warm up
    const auto start = std::chrono::steady_clock::now();
    const Coord result = intersect_relaxed(t, c);
    const SpanCounts s = span_counts(t, 1, 3);
    const double elapsed = ms_since(start);
    const bool ok = result == 4 && s.above == 0 && s.below == 2 && elapsed < 1.0;
    report(2, "sample meets the curve around punctures 2..4 in 4 points, under 1 ms", ok, elapsed);
}

void criterion_3() {
    const auto start = std::chrono::steady_clock::now();
    const TriangleCoords t1(PunctureCount(3), {3, 1}, {4, 2});
    const TriangleCoords t2(PunctureCount(3), {4, 2}, {2, 6});
    const bool ok = intersect_d3(t1, t2) == 10;
    report(3, "3-puncture pair with opposite loop sides meets in 10 points", ok, ms_since(start));
}

void criterion_4() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(0xACCE9741u);
    bool ok = true;
    for (int trial = 0; trial < 100'000 && ok; ++trial) {
        const PunctureCount n(3 + static_cast<int>(bounded(rng, 10)));
        const DynnikovCoords d = random_dynnikov(rng, n, 1'000'000);
        const TriangleCoords t = triangle_from_dynnikov(d);
        const DynnikovCoords back = dynnikov_from_triangle(t);  // also validates t
        ok = validate_triangle(t).empty() && back.a == d.a && back.b == d.b;
    }
    const double elapsed = ms_since(start);
    report(4, "100000 random round trips through triangle coordinates, under 60 s",
           ok && elapsed < 60'000, elapsed);
}

void criterion_5() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(0xACCE9745u);
    bool ok = true;
    for (int trial = 0; trial < 10'000 && ok; ++trial) {
        const PunctureCount n(3 + static_cast<int>(bounded(rng, 8)));
        const IntervalFamily f = random_family(n, 8, rng());
        const TriangleCoords t = family_triangle(f);
        for (int i = 1; i < n.value() && ok; ++i)
            for (int j = i + 1; j <= n.value() && ok; ++j) {
                if (i == 1 && j == n.value()) continue;
                const RelaxedCurve c(n, i, j);
                ok = intersect_relaxed(t, c) == linking_intersection(f, c);
            }
    }
    const double elapsed = ms_since(start);
    report(5, "10000 random families: formula equals the linking oracle for every curve, under 60 s",
           ok && elapsed < 60'000, elapsed);
}

void criterion_6() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(0xACCE9746u);
    bool ok = true;
    for (int trial = 0; trial < 1'000 && ok; ++trial) {
        const PunctureCount n(3 + static_cast<int>(bounded(rng, 6)));
        const TriangleCoords t = triangle_from_dynnikov(random_dynnikov(rng, n, 50));
        const CurveDiagram diagram = reconstruct(t);
        for (int i = 1; i <= n.value() - 2 && ok; ++i)
            for (int j = i; j <= n.value() - 2 && ok; ++j)
                ok = open_components_in_range(diagram, i, j) ==
                     exact_half(checked_add(t.beta[i - 1], t.beta[j]));
    }
    report(6, "1000 random diagrams: open pieces per strip range match the wall counts", ok,
           ms_since(start));
}

void criterion_7() {
    const auto start = std::chrono::steady_clock::now();
    const PunctureCount n3(3);
    const TriangleCoords c12 = round_curve_triangle(n3, 1, 2);
    const TriangleCoords c23 = round_curve_triangle(n3, 2, 3);
    std::mt19937_64 rng(0xACCE9747u);
    bool ok = true;
    for (int trial = 0; trial < 10'000 && ok; ++trial) {
        DynnikovCoords d = random_dynnikov(rng, n3, 1'000);
        if (trial % 4 == 0) d.b[0] = 0;  // exercise the loop-free branch
        if (d.is_zero()) d.a[0] = 1;
        const TriangleCoords t = triangle_from_dynnikov(d);

        ok = intersect_relaxed(t, RelaxedCurve(n3, 1, 2)) == t.beta[1] &&
             intersect_relaxed(t, RelaxedCurve(n3, 2, 3)) == t.beta[0] &&
             intersect_d3(t, c12) == intersect_relaxed(t, RelaxedCurve(n3, 1, 2)) &&
             intersect_d3(t, c23) == intersect_relaxed(t, RelaxedCurve(n3, 2, 3));

        if (ok && t.beta[0] == t.beta[1]) {
            // No loops: the two branch formulas must coincide on any partner.
            const TriangleCoords other = triangle_from_dynnikov(random_dynnikov(rng, n3, 1'000));
            const Coord cross1 = checked_mul(t.alpha[1], other.alpha[0]);
            const Coord cross2 = checked_mul(t.alpha[0], other.alpha[1]);
            ok = checked_abs(checked_sub(cross1, cross2)) == checked_add(cross1, cross2) &&
                 intersect_d3(t, other) == checked_add(cross1, cross2);
        }
    }
    report(7, "10000 random 3-puncture checks: wall counts, formula agreement, loop-free branches",
           ok, ms_since(start));
}

void criterion_8() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int n = 3; n <= 12 && ok; ++n) {
        const PunctureCount pc(n);
        for (int i = 1; i < n && ok; ++i)
            for (int j = i + 1; j <= n && ok; ++j) {
                if (i == 1 && j == n) continue;
                ok = intersect_relaxed(round_curve_triangle(pc, i, j), RelaxedCurve(pc, i, j)) == 0;
            }
    }
    std::mt19937_64 rng(0xACCE9748u);
    const PunctureCount n3(3);
    for (int trial = 0; trial < 10'000 && ok; ++trial) {
        const TriangleCoords t1 = triangle_from_dynnikov(random_dynnikov(rng, n3, 1'000));
        const TriangleCoords t2 = triangle_from_dynnikov(random_dynnikov(rng, n3, 1'000));
        ok = intersect_d3(t1, t2) == intersect_d3(t2, t1);
    }
    report(8, "every curve misses itself; 10000 pair intersections are symmetric", ok,
           ms_since(start));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures == 0)
        std::printf("all 8 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
