#!/usr/bin/env python3
"""
Tests for cycles, boxes and free involutions.

Usage:
    pytest test_antipode.py
"""

import os
import sys

import networkx as nx
import pytest

# Add current directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from services.antipode import (
    Cycle,
    Involution,
    NBox,
    box_boundary,
    box_involution,
    cycle_antipode,
    validate_involution,
)
from services.errors import InvalidInputError, NotAnInvolutionError


def test_cycle_structure():
    cycle = Cycle(8)
    degrees = {d for _, d in cycle.image.graph.degree}
    assert degrees == {2}
    assert cycle.image.is_connected()
    with pytest.raises(InvalidInputError):
        Cycle(3)


def test_cycle_antipode_c8():
    inv = cycle_antipode(Cycle(8))
    assert inv((0,)) == (4,)
    assert inv((3,)) == (7,)
    assert inv.report.ok


def test_cycle_antipode_c4_is_involution():
    inv = cycle_antipode(Cycle(4))
    for i in range(4):
        assert inv(inv((i,))) == (i,)
    assert inv((0,)) == (2,)


def test_cycle_antipode_odd_length():
    with pytest.raises(NotAnInvolutionError):
        cycle_antipode(Cycle(5))


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_cycle_antipode_is_automorphism(n):
    cycle = Cycle(n)
    inv = cycle_antipode(cycle)
    for a, b in cycle.image.adjacent_pairs:
        assert cycle.image.graph.has_edge(inv(a), inv(b))


def test_box_boundary_sizes():
    assert len(box_boundary(NBox.cube(3))) == 26
    assert (0, 0, 0) not in box_boundary(NBox.cube(3))
    assert len(box_boundary(NBox([(0, 1), (0, 1)]))) == 4
    # 2 * 150 + 2 * 118 - 4
    assert len(box_boundary(NBox([(0, 149), (0, 117)]))) == 532


def test_degenerate_box_rejected():
    with pytest.raises(InvalidInputError):
        NBox([(0, 3), (2, 2)])
    with pytest.raises(InvalidInputError):
        NBox([(3, 0)])


def test_box_involution_examples():
    inv = box_involution(NBox([(0, 149), (0, 117)]), 2)
    assert inv((0, 87)) == (149, 30)
    assert inv((0, 0)) == (149, 117)

    cube = box_involution(NBox.cube(3))
    assert cube((1, 0, 0)) == (-1, 0, 0)
    assert cube((-1, -1, -1)) == (1, 1, 1)


@pytest.mark.parametrize("bounds", [
    [(0, 1)],
    [(0, 3)],
    [(0, 2), (0, 2)],
    [(0, 1), (0, 3)],
    [(-1, 1), (-1, 1), (-1, 1)],
    [(0, 1), (0, 2), (0, 1)],
])
def test_box_involution_valid_under_every_ck(bounds):
    box = NBox(bounds)
    for k in range(1, box.dimension + 1):
        inv = Involution(box_boundary(box, k), box.reflect)
        assert validate_involution(inv).ok


@pytest.mark.parametrize("w, h", [(2, 2), (3, 5), (6, 4)])
def test_rectangle_boundary_is_a_cycle(w, h):
    frame = box_boundary(NBox([(0, w - 1), (0, h - 1)]), 1)
    assert {d for _, d in frame.graph.degree} == {2}
    assert frame.is_connected()
    assert nx.is_isomorphic(frame.graph, Cycle(len(frame)).image.graph)


def test_identity_fails_freeness_everywhere():
    frame = box_boundary(NBox([(0, 1), (0, 1)]), 1)
    report = validate_involution(Involution(frame, lambda p: p))
    assert report.total and report.involutive and report.continuous
    assert not report.free and not report.ok
    assert "and 3 more" in report.failures[0]


def test_partial_and_discontinuous_maps():
    cycle = Cycle(6)
    partial = Involution(cycle.image, {(0,): (3,), (3,): (0,)})
    report = partial.report
    assert not report.total

    # c_0 <-> c_2, c_1 <-> c_4, c_3 <-> c_5: the edge c_0 c_1 goes to c_2, c_4
    table = {(0,): (2,), (2,): (0,), (1,): (4,), (4,): (1,), (3,): (5,), (5,): (3,)}
    report = validate_involution(Involution(cycle.image, table))
    assert report.involutive and report.free
    assert not report.continuous
    with pytest.raises(NotAnInvolutionError):
        Involution(cycle.image, table).require_valid()


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
