#!/usr/bin/env python3
"""
Tests for the command line: JSON on stdout and exit codes.

Usage:
    pytest test_cli.py
"""

import json
import os
import sys

import pytest
from PIL import Image

# Add current directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from main import EXIT_FINDING, EXIT_INVALID, EXIT_OK, main

FIXTURE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "docs", "fixtures", "gradient_4x4.pgm")


def test_analyze_json(capsys):
    assert main(["analyze", FIXTURE]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["lipschitz_constant"] == 1
    assert report["bound"] == 2
    assert report["best_pair"]["gap"] == 1


def test_analyze_summary(capsys):
    assert main(["analyze", FIXTURE, "--summary", "--adjacency", "c1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "boundary adjacency c1" in out
    assert "bound holds" in out


def test_analyze_annotate(tmp_path, capsys):
    target = tmp_path / "marked.png"
    assert main(["analyze", FIXTURE, "--annotate", str(target)]) == EXIT_OK
    with Image.open(target) as marked:
        assert marked.size == (16, 16)


def test_analyze_missing_file(tmp_path, capsys):
    assert main(["analyze", str(tmp_path / "nothing.pgm")]) == EXIT_INVALID
    assert "cannot read" in capsys.readouterr().err


def test_analyze_malformed_file(tmp_path, capsys):
    bad = tmp_path / "bad.pgm"
    bad.write_bytes(b"P2\n2 2\n255\n1 2\n")
    assert main(["analyze", str(bad)]) == EXIT_INVALID
    assert "truncated" in capsys.readouterr().err


def test_regularity_output_is_stable(capsys):
    assert main(["regularity", "--dim", "2", "--k", "2"]) == EXIT_OK
    first = capsys.readouterr().out
    assert main(["regularity", "--dim", "2", "--k", "2"]) == EXIT_OK
    assert capsys.readouterr().out == first
    assert "runtime_seconds" not in first


def test_regularity_unsupported(capsys):
    assert main(["regularity", "--dim", "4", "--k", "2"]) == EXIT_INVALID


def test_demo_counterexample(capsys):
    assert main(["demo-counterexample"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["claims_reproduced"] is True


def test_verify_counterexample_scope(capsys):
    assert main(["verify", "--scope", "counterexample", "--seed", "1"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["seed"] == 1


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["analyze", FIXTURE, "--adjacency", "c3"],
    ["regularity", "--dim", "two", "--k", "1"],
    ["verify", "--scope", "nowhere"],
    [],
])
def test_usage_errors_exit_invalid(argv, capsys):
    assert main(argv) == EXIT_INVALID
    assert "error:" in capsys.readouterr().err


def test_help_exits_ok(capsys):
    assert main(["--help"]) == EXIT_OK
    assert "analyze" in capsys.readouterr().out


def test_exit_code_values():
    assert (EXIT_OK, EXIT_INVALID, EXIT_FINDING) == (0, 1, 2)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
