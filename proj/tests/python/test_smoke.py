"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import knotforge as kf

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
QUARTIC = [(0, 1), (1, -3), (2, 5), (3, -3), (4, 1)]


def test_parse_and_invariants():
    t = kf.PlanarDiagram.parse(TREFOIL, "3_1")
    assert t.crossing_count == 3
    assert t.writhe() == -3
    assert kf.jones(t) == [(-4, -1), (-3, 1), (-1, 1)]
    assert kf.alexander(t) == [(0, 1), (1, -1), (2, 1)]
    assert kf.determinant(t) == 3


def test_diagram_operations():
    t = kf.PlanarDiagram.parse(TREFOIL, "3_1")
    m = t.mirror()
    assert m.writhe() == 3
    assert kf.jones(m) == [(1, 1), (3, 1), (4, -1)]
    s = kf.connected_sum(t, m)
    assert s.crossing_count == 6
    assert t.mirror().mirror().same_diagram(t)
    assert t.simplify().crossing_count == 3


def test_validation_errors():
    with pytest.raises(ValueError):
        kf.PlanarDiagram.parse("X(1,1,2,2) X(3,3,4,4)")


def test_family_and_monodromy():
    k0 = kf.family_63(0)
    assert kf.alexander(k0) == QUARTIC
    assert kf.determinant(k0) == 13
    k1 = kf.family_63(1)
    assert kf.alexander(k1) == QUARTIC
    assert kf.jones(k1) != kf.jones(k0)
    assert kf.alexander_from_monodromy(1) == QUARTIC
    assert kf.word_for_An(0) == [("d", -1), ("b", 1), ("c", -1), ("a", 1)]


def test_d3():
    assert kf.d3_family(0) == Fraction(3, 2)
    assert kf.d3_family(2) == Fraction(-9, 2)
    assert kf.d3('{"linking": [], "rotations": [], "q": 0}') == Fraction(-1, 2)
    assert kf.same_fibered_knot(0, -1)
    assert not kf.same_fibered_knot(1, 2)


def test_ribbon_check_and_dichotomy():
    import json

    k0 = kf.family_63(0)
    k1 = kf.family_63(1)
    verdict = json.loads(kf.ribbon_check(k0, k1))
    assert verdict["conclusion"] == "NotRibbon"
    same = json.loads(kf.ribbon_check(k0, k0))
    assert same["conclusion"] == "Inconclusive"
    rep = kf.dichotomy_report(0, 1)
    assert rep["not_ribbon"]["conclusion"] == "NotRibbon"
    with pytest.raises(ValueError):
        kf.dichotomy_report(0, -1)


def test_annulus_presentation_roundtrip():
    ap = kf.annulus_presentation_63()
    assert {"knot", "site1", "site2"} <= set(ap)
    twisted = kf.annulus_twist(ap, 1)
    d = kf.diagram_from_json(__import__("json").dumps(twisted))
    assert kf.alexander(d) == QUARTIC
