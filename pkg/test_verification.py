#!/usr/bin/env python3
"""
Tests for the theorem verification suites.

The dim1 and highdim corpora are exhaustive or large; they are marked slow.

Usage:
    pytest test_verification.py -m "not slow"
"""

import os
import sys

import pytest

# Add current directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from services.errors import InvalidInputError
from services.verification import counterexample_checks, lipschitz_checks, verify_suite


def test_counterexample_scope():
    report = verify_suite("counterexample", 42)
    assert report.passed
    assert [c.name for c in report.checks] == ["counterexample", "counterexample-simplex"]
    assert all(c.instances == 1 for c in report.checks)


def test_counterexample_checks_have_no_failures():
    for check in counterexample_checks():
        assert check.failures == []


def test_lipschitz_checks_small_corpus():
    checks = lipschitz_checks(seed=7, pairs=60)
    assert [c.name for c in checks] == [
        "lipschitz-combination",
        "lipschitz-composition",
        "lipschitz-power",
        "lipschitz-continuity",
    ]
    assert all(c.passed for c in checks)
    assert checks[2].instances == 4 * 60


def test_same_seed_same_report():
    assert lipschitz_checks(seed=3, pairs=20) == lipschitz_checks(seed=3, pairs=20)


def test_unknown_scope():
    with pytest.raises(InvalidInputError):
        verify_suite("everything")


@pytest.mark.slow
def test_lipschitz_scope():
    assert verify_suite("lipschitz", 42).passed


@pytest.mark.slow
def test_dim1_scope():
    report = verify_suite("dim1", 42)
    assert report.passed
    sharp = next(c for c in report.checks if c.name == "dim1-sharpness")
    assert sharp.observed_max == 1


@pytest.mark.slow
def test_highdim_scope():
    report = verify_suite("highdim", 42)
    assert report.passed
    assert {c.name for c in report.checks} == {"highdim-c1", "highdim-c1-power", "highdim-cn-1"}


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
