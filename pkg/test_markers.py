#!/usr/bin/env python3
"""
Tests for the annotated analysis rendering.

Usage:
    pytest test_markers.py
"""

import io
import logging
import os
import sys

import pytest
from PIL import Image

# Add current directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from services.analysis import analyze
from services.image_markers import AnalysisMarker, encode_png
from services.pgm import GrayImage

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


@pytest.fixture
def ramp():
    # 40x30, brightness 6 * column; best pair (19, 0) / (20, 29)
    return GrayImage.from_rows([[6 * c for c in range(40)] for _ in range(30)])


def test_ramp_report(ramp):
    report = analyze(ramp)
    assert report.lipschitz_constant == 6
    assert (report.best_pair.x, report.best_pair.antipode, report.best_pair.gap) == ((19, 0), (20, 29), 6)


def test_mark_size_and_mode(ramp):
    marked = AnalysisMarker(scale=4).mark(ramp, analyze(ramp))
    assert marked.size == (160, 120)
    assert marked.mode == "RGBA"


def test_antipode_outlined_in_red(ramp):
    marker = AnalysisMarker(scale=4)
    marked = marker.mark(ramp, analyze(ramp))
    # Top-left corner of the outline around pixel (20, 29)
    assert marked.getpixel((80, 116)) == marker.pair_color


def test_interior_untouched(ramp):
    marked = AnalysisMarker(scale=4).mark(ramp, analyze(ramp))
    # Pixel (5, 20) sits away from the frame, the label and the pair line
    r, g, b, a = marked.getpixel((5 * 4 + 1, 20 * 4 + 1))
    assert r == g == b == 30 and a == 255


def test_encode_png(ramp):
    marked = AnalysisMarker(scale=2).mark(ramp, analyze(ramp))
    png = encode_png(marked)
    assert png.startswith(PNG_MAGIC)
    assert Image.open(io.BytesIO(png)).size == (80, 60)


def test_marking_logs_instead_of_printing(ramp, caplog, capsys):
    with caplog.at_level(logging.DEBUG, logger="services.image_markers"):
        AnalysisMarker(scale=2).mark(ramp, analyze(ramp))
    assert any("Best pair (19, 0) / (20, 29)" in r.getMessage() for r in caplog.records)
    assert capsys.readouterr().out == ""


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
