"""Horn filling, Kan certification, lifting properties."""

import pytest

from simphom.kan import (
    HornMap,
    enumerate_horns,
    fibration_check,
    fill_horn,
    kan_check,
)
from simphom.simplex import SimplexRef
from simphom.sset import constant_map, discrete, std_simplex


def test_fill_in_discrete_space():
    space = discrete(2)
    h = HornMap(2, 1, (SimplexRef(0, 0, (0,)), None, SimplexRef(0, 0, (0,))))
    fillers = fill_horn(space, h)
    assert fillers == [SimplexRef(0, 0, (1, 0))]


def test_fill_point_unique():
    pt = std_simplex(0)
    h = HornMap(1, 0, (None, SimplexRef(0, 0)))
    assert fill_horn(pt, h) == [SimplexRef(0, 0, (0,))]


def test_interval_horn_has_no_filler():
    d1 = std_simplex(1)
    h = HornMap(2, 0, (None, SimplexRef(0, 0, (0,)), SimplexRef(1, 0)))
    assert fill_horn(d1, h) == []


def test_incompatible_horn_rejected():
    d1 = std_simplex(1)
    # d1 = constant edge at vertex 1 is incompatible with d2 = the edge
    h = HornMap(2, 0, (None, SimplexRef(0, 1, (0,)), SimplexRef(1, 0)))
    with pytest.raises(ValueError):
        fill_horn(d1, h)


def test_discrete_is_kan_through_three():
    for m in (1, 2, 3):
        report = kan_check(discrete(m), 3)
        assert report.passed
        assert report.horns_checked > 0


def test_interval_fails_kan_with_witness():
    report = kan_check(std_simplex(1), 2)
    assert not report.passed
    witnessed = any(
        f.n == 2 and f.k == 0
        and f.faces[1] == SimplexRef(0, 0, (0,))
        and f.faces[2] == SimplexRef(1, 0)
        for f in report.failures)
    assert witnessed


def test_horn_enumeration_counts_interval():
    d1 = std_simplex(1)
    # (1, k) horns are single vertices; (2, k) horns are compatible pairs
    assert sum(1 for _ in enumerate_horns(d1, 1, 0)) == 2
    horns2 = list(enumerate_horns(d1, 2, 0))
    for h in horns2:
        assert h.faces[0] is None
        assert h.faces[1].dim == 1 and h.faces[2].dim == 1


def test_kan_self_consistency_fillers_exist():
    space = discrete(2)
    report = kan_check(space, 3)
    assert report.passed
    for n in (1, 2, 3):
        for k in range(n + 1):
            for h in enumerate_horns(space, n, k):
                assert fill_horn(space, h)


def test_fibration_to_point_equals_kan():
    pt = std_simplex(0)
    for space in (std_simplex(1), discrete(2)):
        kan = kan_check(space, 2)
        fib = fibration_check(constant_map(space, pt, 0), 2)
        assert kan.passed == fib.passed
        assert len(kan.failures) == len(fib.failures)


def test_circle_kan_fails(circle):
    # the circle is not Kan: its loop has no inverse filler
    report = kan_check(circle, 2)
    assert not report.passed
