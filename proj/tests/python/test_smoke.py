"""Smoke tests for the python bindings."""

import math
from fractions import Fraction

import pytest

import rgcr

SQUARE_WEAVE = """\
polygons 2
W 4
S 4
gluing
W.0 S.2 -
W.1 S.3 -
W.2 S.0 -
W.3 S.1 -
"""


def test_signature_catalog_sizes():
    assert len(rgcr.enumerate_signatures(2)) == 14
    assert len(rgcr.enumerate_signatures(3)) == 21
    assert len(rgcr.enumerate_signatures(4)) == 26


def test_first_genus2_signature():
    first = rgcr.enumerate_signatures(2)[0]
    assert (first.m, first.n, first.k_m, first.k_n) == (5, 4, 8, 10)


def test_genus1_is_euclidean():
    sigs = rgcr.enumerate_signatures(1)
    assert [(s.n, s.m) for s in sigs] == [(4, 4), (3, 6)]
    assert all(s.k_n is None for s in sigs)


def test_signature_from_pair():
    sig = rgcr.signature_from_pair(2, 4, 5)
    assert (sig.k_n, sig.k_m) == (10, 8)
    assert rgcr.signature_from_pair(2, 3, 5) is None


def test_count_bounds_exact():
    pair, link = rgcr.count_bounds(2)
    assert pair == Fraction(670, 9)
    assert link == Fraction(670, 9) * Fraction(math.factorial(85))


def test_octagon_angles_are_right():
    alpha_n, alpha_m = rgcr.interior_angles(8, 8)
    assert alpha_n == pytest.approx(math.pi / 2, abs=1e-12)
    assert alpha_m == pytest.approx(math.pi / 2, abs=1e-12)
    assert rgcr.dihedral_check(alpha_n, alpha_m) == pytest.approx(math.pi / 2, abs=1e-12)


def test_polygon_geometry_octagon():
    geo = rgcr.polygon_geometry(8, math.pi / 2)
    assert geo.area == pytest.approx(2 * math.pi)
    assert not geo.flat


def test_gauss_bonnet_residual():
    for sig in rgcr.enumerate_signatures(2):
        assert abs(rgcr.gauss_bonnet_residual(sig)) < 1e-9


def test_cross_ratio():
    assert rgcr.regular_cross_ratio(4) == pytest.approx(2.0)
    assert rgcr.regular_cross_ratio(6) == pytest.approx(1.5)
    with pytest.raises(Exception):
        rgcr.regular_cross_ratio(3)


def test_square_weave_verification():
    report = rgcr.verify_diagram_text(SQUARE_WEAVE)
    assert report.genus == 1
    assert report.face_vector == [4, 4]
    assert report.vertex_pattern_ok
    assert report.colorable
    assert report.weakly_prime
    assert report.components == 2
    assert report.edge_class_sizes == [4, 4]


def test_surface_map_roundtrip():
    m = rgcr.SurfaceMap.from_diagram_text(SQUARE_WEAVE)
    assert (m.vertex_count, m.edge_count, m.face_count) == (2, 4, 2)
    assert m.genus() == 1
    assert m.canonical_form() == m.mirrored().canonical_form()
    assert rgcr.maps_isomorphic(m, m.mirrored())


def test_parse_error_reports_line():
    with pytest.raises(rgcr.DiagramParseError):
        rgcr.verify_diagram_text("polygons 1\nA 4\ngluing\nA.0 A.1 -\n")


def test_minimal_torus_enumeration():
    diagrams, knot_count = rgcr.enumerate_diagrams(rgcr.euclidean_signature(4, 4))
    assert len(diagrams) == 1
    assert knot_count == 0
    report = diagrams[0].report
    assert report.components == 2
    weave = rgcr.SurfaceMap.from_diagram_text(SQUARE_WEAVE)
    found = rgcr.SurfaceMap.from_diagram_text(diagrams[0].diagram_text)
    assert rgcr.maps_isomorphic(weave, found)


def test_genus2_knot_exists():
    knots = rgcr.find_knots(rgcr.signature_from_pair(2, 8, 8))
    assert knots
    assert all(k.report.components == 1 for k in knots)


def test_search_cap():
    with pytest.raises(rgcr.SearchTooLargeError):
        rgcr.enumerate_diagrams(rgcr.signature_from_pair(2, 4, 5))
