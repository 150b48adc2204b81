#!/usr/bin/env python3
"""
Tests for lattice points, adjacency relations and digital images.

Usage:
    pytest test_lattice.py
    python test_lattice.py
"""

import itertools
import os
import sys

import pytest

# Add current directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from services.antipode import Cycle, NBox, box_boundary
from services.errors import InvalidInputError
from services.lattice import (
    CK,
    Adjacency,
    DigitalImage,
    Explicit,
    Power,
    adjacent,
    connected_components,
    digital_interval,
    path_distance,
)


def window(n, radius):
    return list(itertools.product(range(-radius, radius + 1), repeat=n))


# ============================================================================
# Adjacency
# ============================================================================

@pytest.mark.parametrize("adj, p, q, expected", [
    (CK(2, 2), (0, 0), (1, 1), True),
    (CK(2, 1), (0, 0), (1, 1), False),
    (CK(3, 2), (1, 0, 0), (0, 1, 0), True),
    (CK(3, 2), (0, 0, 0), (1, 1, 1), False),
    (CK(3, 3), (0, 0, 0), (1, 1, 1), True),
    (CK(1, 1), (0,), (2,), False),
])
def test_ck_examples(adj, p, q, expected):
    assert adjacent(adj, p, q) is expected


def test_dimension_mismatch_is_invalid_input():
    with pytest.raises(InvalidInputError):
        CK(2, 1).adjacent((0, 0), (0, 0, 1))
    with pytest.raises(ValueError):
        CK(2, 1).distance((0,), (1,))


@pytest.mark.parametrize("n, k", [(2, 0), (2, 3), (0, 1)])
def test_ck_parameter_range(n, k):
    with pytest.raises(InvalidInputError):
        CK(n, k)


@pytest.mark.parametrize("adj", [CK(2, 1), CK(2, 2), Power(CK(2, 1), 2), Power(CK(2, 2), 3)])
def test_symmetric_and_antireflexive(adj):
    pts = window(2, 2)
    for p in pts:
        assert not adj.adjacent(p, p)
        for q in pts:
            assert adj.adjacent(p, q) == adj.adjacent(q, p)


def test_ck_monotone_in_k():
    pts = window(3, 1)
    for k in (1, 2):
        for p, q in itertools.product(pts, repeat=2):
            if CK(3, k).adjacent(p, q):
                assert CK(3, k + 1).adjacent(p, q)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_power_laws(n):
    base = CK(n, 1)
    centers = window(n, 1)
    targets = window(n, 3)
    for p in centers:
        for q in targets:
            assert Power(base, 1).adjacent(p, q) == base.adjacent(p, q)
            for m, k in [(2, 2), (1, 3), (2, 1)]:
                assert Power(Power(base, m), k).adjacent(p, q) == Power(base, m * k).adjacent(p, q)


@pytest.mark.parametrize("adj", [CK(2, 1), CK(2, 2), CK(3, 2), CK(3, 1)])
def test_closed_form_distance_matches_bfs(adj):
    origin = (0,) * adj.dimension
    shells = [Adjacency.reach(adj, origin, r) for r in range(7)]
    for q in window(adj.dimension, 2):
        bfs = next(r for r, ball in enumerate(shells) if q in ball)
        assert adj.distance(origin, q) == bfs


def test_power_distance_agrees_with_power_adjacency():
    lam = Power(CK(2, 1), 2)
    for q in window(2, 3):
        assert (lam.distance((0, 0), q) <= 1) == lam.adjacent_or_equal((0, 0), q)
    assert lam.distance((0, 0), (3, 2)) == 3


def test_power_labels():
    assert CK(2, 1).label == "c_1"
    assert Power(CK(2, 1), 2).label == "c_1^2"
    assert Power(Power(CK(2, 1), 2), 3).label == "(c_1^2)^3"


def test_explicit_validation():
    with pytest.raises(InvalidInputError):
        Explicit.from_edges([(0,), (1,)], [((0,), (0,))])
    with pytest.raises(InvalidInputError):
        Explicit.from_edges([(0,), (1,)], [((0,), (2,))])


def test_power_of_explicit_graph():
    cycle = Cycle(8)
    lam = Power(cycle.image.adjacency, 2)
    assert lam.adjacent((0,), (2,))
    assert lam.adjacent((0,), (6,))
    assert not lam.adjacent((0,), (3,))
    assert lam.distance((0,), (4,)) == 2


# ============================================================================
# Images
# ============================================================================

def test_path_distance_examples():
    line = digital_interval(0, 5)
    assert path_distance(line, (0,), (3,)) == 3
    assert path_distance(line, (4,), (4,)) == 0
    assert path_distance(Cycle(8).image, (0,), (4,)) == 4


def test_path_distance_requires_membership():
    with pytest.raises(InvalidInputError):
        path_distance(digital_interval(0, 5), (0,), (9,))


def test_path_distance_absent_across_components():
    image = DigitalImage([(0, 0), (1, 0), (5, 5)], CK(2, 1))
    assert path_distance(image, (0, 0), (5, 5)) is None


def test_connected_components():
    image = DigitalImage([(5, 5), (1, 0), (0, 0)], CK(2, 1))
    assert connected_components(image) == [((0, 0), (1, 0)), ((5, 5),)]

    line = digital_interval(0, 3)
    assert connected_components(line) == [tuple(line.sorted_points)]

    shell = box_boundary(NBox.cube(3), 1)
    blocks = connected_components(shell)
    assert len(blocks) == 1 and len(blocks[0]) == 26


def test_path_distance_is_a_metric():
    frame = box_boundary(NBox([(0, 3), (0, 2)]), 1)
    image = DigitalImage(list(frame.points) + [(9, 9), (9, 10)], CK(2, 1))
    pts = image.sorted_points
    for p, q in itertools.product(pts, repeat=2):
        d = image.path_distance(p, q)
        assert d == image.path_distance(q, p)
        assert (d == 0) == (p == q)
    for p, q, r in itertools.product(pts, repeat=3):
        pq, qr, pr = image.path_distance(p, q), image.path_distance(q, r), image.path_distance(p, r)
        if pq is not None and qr is not None:
            assert pr <= pq + qr


def test_shortest_path_is_valid_and_deterministic():
    frame = box_boundary(NBox([(0, 4), (0, 4)]), 2)
    p, q = (0, 0), (4, 4)
    path = frame.shortest_path(p, q)
    assert path[0] == p and path[-1] == q
    assert len(path) - 1 == frame.path_distance(p, q)
    for a, b in zip(path, path[1:]):
        assert frame.adjacency.adjacent(a, b)
    assert path == frame.shortest_path(p, q)


def test_image_rejects_mixed_dimensions():
    with pytest.raises(InvalidInputError):
        DigitalImage([(0,), (0, 1)], CK(2, 1))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
