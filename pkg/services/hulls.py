"""
Exact convex-hull intersection for finite lattice point sets.

conv(S) meets conv(R) iff there are weights lam >= 0, mu >= 0 with
sum(lam) = sum(mu) = 1 and sum(lam_i s_i) = sum(mu_j r_j). Feasibility of that
system is decided by sympy's rational simplex (`sympy.solvers.simplex.linprog`),
so no floating point is involved.

Cheap cases are answered before the linear program is built: a shared vertex,
dimension one, and sets separated by a hyperplane with normal in {-1, 0, 1}^n
(disjoint bounding boxes are the axis-normal case).
"""

import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy.solvers.simplex import InfeasibleLPError, linprog

from services.errors import InvalidInputError
from services.lattice import Point, as_point

logger = logging.getLogger(__name__)

RationalPoint = Tuple[Fraction, ...]


def _normalize(points: Iterable[Iterable[int]], name: str) -> List[Point]:
    pts = sorted({as_point(p) for p in points})
    if not pts:
        raise InvalidInputError(f"{name} is empty")
    return pts


def _dimension(sigma: Sequence[Point], rho: Sequence[Point]) -> int:
    dims = {len(p) for p in sigma} | {len(p) for p in rho}
    if len(dims) != 1:
        raise InvalidInputError(f"point sets mix dimensions {sorted(dims)}")
    return dims.pop()


def bounding_box(points: Sequence[Point]) -> Tuple[Point, Point]:
    return tuple(map(min, zip(*points))), tuple(map(max, zip(*points)))


def boxes_overlap(sigma: Sequence[Point], rho: Sequence[Point]) -> bool:
    lo_s, hi_s = bounding_box(sigma)
    lo_r, hi_r = bounding_box(rho)
    return all(max(a, c) <= min(b, d) for a, b, c, d in zip(lo_s, hi_s, lo_r, hi_r))


@lru_cache(maxsize=8)
def _directions(d: int) -> Tuple[Tuple[int, ...], ...]:
    """One of each +-pair of nonzero vectors in {-1, 0, 1}^d."""
    return tuple(w for w in itertools.product((-1, 0, 1), repeat=d) if w > (0,) * d)


def separated(sigma: Sequence[Point], rho: Sequence[Point]) -> bool:
    """True when some normal in {-1, 0, 1}^n strictly separates the two sets."""
    for w in _directions(len(sigma[0])):
        s = [sum(a * b for a, b in zip(w, p)) for p in sigma]
        r = [sum(a * b for a, b in zip(w, q)) for q in rho]
        if max(s) < min(r) or max(r) < min(s):
            return True
    return False


def _rational(value) -> Fraction:
    return Fraction(str(value))


def _common_weights(s: Sequence[Point], r: Sequence[Point], d: int) -> Optional[List[Fraction]]:
    """lam for sigma from a feasible (lam, mu), or None when the system is infeasible."""
    equalities = [[p[c] for p in s] + [-q[c] for q in r] for c in range(d)]
    equalities.append([1] * len(s) + [0] * len(r))
    equalities.append([0] * len(s) + [1] * len(r))
    rhs = [0] * d + [1, 1]
    # linprog keeps every variable nonnegative; equalities go in as two inequalities
    rows = equalities + [[-v for v in row] for row in equalities]
    bounds = rhs + [-v for v in rhs]
    try:
        _, weights = linprog([0] * (len(s) + len(r)), rows, bounds)
    except InfeasibleLPError:
        return None
    return [_rational(w) for w in weights[:len(s)]]


def hull_intersection_point(sigma: Iterable[Iterable[int]], rho: Iterable[Iterable[int]]) -> Optional[RationalPoint]:
    """
    An exact common point of conv(sigma) and conv(rho), or None.

    Args:
        sigma: Nonempty finite set of lattice points
        rho: Nonempty finite set of lattice points of the same dimension

    Returns:
        A tuple of Fractions lying in both hulls (a shared vertex when there is
        one), or None when the hulls are disjoint
    """
    s = _normalize(sigma, "sigma")
    r = _normalize(rho, "rho")
    d = _dimension(s, r)

    shared = sorted(set(s) & set(r))
    if shared:
        return tuple(Fraction(c) for c in shared[0])
    if not boxes_overlap(s, r):
        return None
    if d == 1:
        # Overlapping intervals: the larger left end is common to both
        return (Fraction(max(min(s)[0], min(r)[0])),)
    if separated(s, r):
        return None

    weights = _common_weights(s, r, d)
    if weights is None:
        return None
    return tuple(sum((w * p[c] for w, p in zip(weights, s)), Fraction(0)) for c in range(d))


def hulls_intersect(sigma: Iterable[Iterable[int]], rho: Iterable[Iterable[int]]) -> bool:
    return hull_intersection_point(sigma, rho) is not None
