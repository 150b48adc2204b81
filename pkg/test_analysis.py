#!/usr/bin/env python3
"""
Tests for antipodal brightness analysis of grayscale images.

The golden test on the Grainstack photograph runs only when BU_GRAINSTACK_PGM
points at a local copy of the 150x118 PGM.

Usage:
    pytest test_analysis.py
    BU_GRAINSTACK_PGM=/path/to/grainstack.pgm pytest test_analysis.py
"""

import os
import random
import sys

import pytest

# Add current directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import config
from services.analysis import analyze, boundary_brightness
from services.errors import InvalidInputError
from services.pgm import GrayImage, read_pgm

FIXTURE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "docs", "fixtures", "gradient_4x4.pgm")


def load_fixture():
    with open(FIXTURE, "rb") as fh:
        return read_pgm(fh.read())


def test_constant_image():
    image = GrayImage.from_rows([[77] * 16 for _ in range(16)])
    report = analyze(image)
    assert report.lipschitz_constant == 0
    assert report.bound == 0
    assert report.best_pair.gap == 0
    assert report.theorem_satisfied is None
    assert report.image_size == (16, 16)


@pytest.mark.parametrize("adjacency", ["c1", "c2"])
def test_gradient_fixture(adjacency):
    report = analyze(load_fixture(), adjacency)
    assert report.lipschitz_constant == 1
    assert (report.lipschitz_witness.a, report.lipschitz_witness.b) == ((0, 0), (1, 0))
    assert report.lipschitz_witness.gap == 1
    assert report.best_pair.x == (1, 0)
    assert report.best_pair.antipode == (2, 3)
    assert report.best_pair.gap == 1
    assert report.bound == 2 and report.theorem_satisfied


def test_interior_pixels_are_ignored():
    image = load_fixture()
    samples = list(image.samples)
    samples[1 * 4 + 1] = 3
    samples[2 * 4 + 2] = 0
    changed = GrayImage(4, 4, 3, tuple(samples))
    assert analyze(changed) == analyze(image)


def test_report_is_invariant_under_half_turn():
    rng = random.Random(8)
    for _ in range(20):
        w, h = rng.randint(2, 9), rng.randint(2, 9)
        image = GrayImage(w, h, 255, tuple(rng.randint(0, 255) for _ in range(w * h)))
        for adjacency in ("c1", "c2"):
            a, b = analyze(image, adjacency), analyze(image.flipped(), adjacency)
            assert a.lipschitz_constant == b.lipschitz_constant
            assert a.best_pair.gap == b.best_pair.gap
            pair = {a.best_pair.x, a.best_pair.antipode}
            assert {(w - 1 - p[0], h - 1 - p[1]) for p in pair} == pair
            assert {b.best_pair.x, b.best_pair.antipode} == pair
            if a.lipschitz_constant:
                assert a.best_pair.gap < a.bound


def test_boundary_size():
    f = boundary_brightness(GrayImage.from_rows([[0] * 6 for _ in range(5)]), "c1")
    assert len(f.domain) == 2 * 6 + 2 * 5 - 4


def test_rejects_thin_images_and_unknown_adjacency():
    with pytest.raises(InvalidInputError):
        analyze(GrayImage.from_rows([[1, 2, 3]]))
    with pytest.raises(InvalidInputError):
        analyze(load_fixture(), "c3")


@pytest.mark.skipif(
    not (config.GRAINSTACK_PGM and os.path.exists(config.GRAINSTACK_PGM)),
    reason="BU_GRAINSTACK_PGM not set",
)
def test_grainstack_golden():
    with open(config.GRAINSTACK_PGM, "rb") as fh:
        image = read_pgm(fh.read())
    report = analyze(image, "c2")
    assert report.image_size == (150, 118)
    assert report.lipschitz_constant == 23
    assert report.lipschitz_witness.gap == 23
    assert abs(image.brightness(149, 29) - image.brightness(149, 30)) == 23
    assert report.bound == 46
    assert report.best_pair.gap == 13
    # The published pair attains the minimum; the report names the lexicographically least one
    assert abs(image.brightness(0, 87) - image.brightness(149, 30)) == 13
    assert report.best_pair.x <= (0, 87)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
