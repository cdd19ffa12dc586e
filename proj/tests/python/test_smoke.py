# Smoke tests for the Python bindings: conversions, intersection numbers,
# reconstruction, rendering, and exception mapping.
import xml.etree.ElementTree as ET

import pytest

import lamkit

SAMPLE = lamkit.TriangleCoords(5, [2, 6, 3, 5, 4, 4], [4, 8, 8, 4])


def test_round_trip_sample():
    d = lamkit.dynnikov_from_triangle(SAMPLE)
    assert d.a == [2, 1, 0]
    assert d.b == [-2, 0, 2]
    assert lamkit.triangle_from_dynnikov(d) == SAMPLE


def test_round_curve_coordinates():
    c = lamkit.RelaxedCurve(4, 1, 3)
    assert lamkit.relaxed_curve_dynnikov(c) == lamkit.DynnikovCoords(4, [0, 0], [0, 1])
    t = lamkit.triangle_from_dynnikov(lamkit.relaxed_curve_dynnikov(c))
    assert t.alpha == [1, 1, 1, 1]
    assert t.beta == [2, 2, 0]


def test_validation_reports_invariants():
    bad = lamkit.TriangleCoords(3, [1, 2], [2, 0])
    violations = lamkit.validate_triangle(bad)
    assert [v[0] for v in violations] == ["strip_sum_mismatch"]
    assert violations[0][1] == 1
    with pytest.raises(ValueError, match="strip_sum_mismatch"):
        lamkit.dynnikov_from_triangle(bad)


def test_strip_stats_and_span_counts():
    s = lamkit.strip_stats(SAMPLE, 1)
    assert (s.b, s.side, s.above, s.below, s.m, s.x) == (-2, "left", 0, 4, 0, 4)
    assert lamkit.span_counts(SAMPLE, 1, 3) == (0, 2, 2)


def test_intersection_numbers():
    assert lamkit.intersect_relaxed(SAMPLE, lamkit.RelaxedCurve(5, 2, 4)) == 4
    t1 = lamkit.triangle_from_dynnikov(lamkit.DynnikovCoords(3, [-1], [1]))
    t2 = lamkit.triangle_from_dynnikov(lamkit.DynnikovCoords(3, [-1], [-2]))
    assert lamkit.intersect_d3(t1, t2) == 10
    assert lamkit.intersect_d3(t2, t1) == 10


def test_family_formula_matches_linking_oracle():
    f = lamkit.IntervalFamily(4, [(1, 2, 1), (1, 3, 1)])
    t = lamkit.family_triangle(f)
    c = lamkit.RelaxedCurve(4, 2, 3)
    assert lamkit.intersect_relaxed(t, c) == 2
    assert lamkit.linking_intersection(f, c) == 2
    assert lamkit.intersect_relaxed_family(t, lamkit.IntervalFamily(4, [(2, 3, 1)])) == 2


def test_family_validation():
    with pytest.raises(ValueError, match="cross"):
        lamkit.IntervalFamily(4, [(1, 2, 1), (2, 3, 1)])
    with pytest.raises(ValueError):
        lamkit.IntervalFamily(4, [(1, 4, 1)])


def test_reconstruct_counts_components():
    diagram = lamkit.reconstruct(SAMPLE)
    assert len(diagram.components) == 2
    assert lamkit.diagram_triangle(diagram) == SAMPLE
    assert lamkit.open_components_in_range(diagram, 1, 3) == 4
    first = diagram.components[0][0]
    assert (first.region, first.kind, first.lane) == (1, "below", 1)


def test_random_family_reproducible():
    f = lamkit.random_family(6, 5, 42)
    assert f == lamkit.random_family(6, 5, 42)
    assert f.components == [(3, 5, 2)]


def test_render_svg_parses_as_xml():
    svg = lamkit.render_svg(lamkit.reconstruct(SAMPLE), width=400, height=300)
    root = ET.fromstring(svg)
    assert root.tag == "{http://www.w3.org/2000/svg}svg"
    groups = [g for g in root.iter("{http://www.w3.org/2000/svg}g") if g.get("class") == "component"]
    assert len(groups) == 2
    no_frills = lamkit.render_svg(lamkit.reconstruct(SAMPLE), show_arcs=False, show_labels=False)
    assert 'class="arcs"' not in no_frills


def test_overflow_maps_to_overflow_error():
    big = 2**33
    t = lamkit.TriangleCoords(3, [big, big], [2 * big, 0])
    with pytest.raises(OverflowError):
        lamkit.intersect_d3(t, t)


def test_bad_puncture_count_rejected():
    with pytest.raises(ValueError):
        lamkit.TriangleCoords(2, [], [0])
