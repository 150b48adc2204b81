"""
Witness-producing digital intermediate-value and Borsuk-Ulam theorems.

Every theorem here asserts that some point exists. The functions verify the
hypotheses first (raising InvalidInputError when they fail) and then search
exhaustively, returning the lexicographically least witness. A search that
comes back empty raises TheoremViolation, which is a finding rather than an
input problem.

Dimension one:
    ivt_witness            |f(z) - c| < m on a connected image
    antipodal_witness_1d   |f(x) - f(-x)| < 2m under a free involution

Boxes:
    simplex_coincidence_witness   a simplex whose image hulls meet
    antipodal_witness_high_dim    f(x) close to f(-x) on the boundary of an n-box
    proof_witness_high_dim        the same, reconstructed from the simplex lemma
"""

import itertools
import logging
from enum import Enum
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from models import AntipodalWitness, CounterexampleReport
from services.antipode import Involution, NBox, box_boundary, box_involution
from services.errors import InvalidInputError, TheoremViolation
from services.hulls import hulls_intersect
from services.lattice import CK, Adjacency, DigitalImage, Point, Power, as_point
from services.maps import GridFunction, discontinuities, has_lipschitz, is_continuous, min_lipschitz, require_lipschitz

logger = logging.getLogger(__name__)

Simplex = Tuple[Point, ...]


# ============================================================================
# Dimension one
# ============================================================================

def ivt_witness(image: DigitalImage, f: GridFunction, m: int, x: Point, y: Point, c: int) -> Point:
    """
    A point z with |f(z) - c| < m, for f(x) <= c <= f(y).

    Walks the deterministic shortest path from x to y and stops at the first
    point where f reaches c. The previous point is below c and the step is at
    most m, so that point is within m - 1 of c.

    Args:
        image: Connected digital image f is defined on
        f: Z-valued function with Lipschitz constant m
        m: Positive Lipschitz constant of f
        x: Point with f(x) <= c
        y: Point with f(y) >= c
        c: Target value

    Returns:
        The witness point z
    """
    if f.domain != image:
        raise InvalidInputError("f is not defined on the given image")
    if f.dimension != 1:
        raise InvalidInputError("the intermediate value theorem needs a Z-valued function")
    if m < 1:
        raise InvalidInputError(f"Lipschitz constant must be positive, got {m}")
    x, y = image.require(x), image.require(y)
    if not image.is_connected():
        raise InvalidInputError("the image is not connected")
    if not has_lipschitz(f, m):
        report = min_lipschitz(f)
        raise InvalidInputError(
            f"f does not have Lipschitz constant {m} (least constant {report.constant})",
            [(report.witness.a, report.witness.b)],
        )
    if not f.scalar(x) <= c <= f.scalar(y):
        raise InvalidInputError(f"need f(x) <= c <= f(y), got f(x)={f.scalar(x)}, c={c}, f(y)={f.scalar(y)}")

    for z in image.shortest_path(x, y):
        if f.scalar(z) >= c:
            if f.scalar(z) - c >= m:
                raise TheoremViolation(
                    f"ivt step overshoots at {z}", {"point": z, "value": f.scalar(z), "c": c, "m": m}
                )
            return z
    raise TheoremViolation("path from x to y never reaches c", {"x": x, "y": y, "c": c})


def _check_involution(image: DigitalImage, inv: Involution) -> None:
    if inv.carrier != image:
        raise InvalidInputError("the involution acts on a different image")
    inv.require_valid()


def antipodal_witness_1d(image: DigitalImage, inv: Involution, f: GridFunction) -> AntipodalWitness:
    """
    The point minimizing |f(x) - f(-x)|, with the bound 2m of the 1-D theorem.

    Works for any connected image with a free continuous involution, including
    explicit graphs with an automorphism that is a free involution.
    """
    if f.domain != image:
        raise InvalidInputError("f is not defined on the given image")
    if f.dimension != 1:
        raise InvalidInputError("the one-dimensional theorem needs a Z-valued function")
    _check_involution(image, inv)
    if not image.is_connected():
        raise InvalidInputError("the image is not connected")

    best, best_gap = None, None
    for x in image.sorted_points:
        gap = f.codomain.distance(f(x), f(inv(x)))
        if best_gap is None or gap < best_gap:
            best, best_gap = x, gap

    m = require_lipschitz(f)
    satisfied = best_gap < 2 * m if m else None
    if satisfied is False:
        logger.warning("antipodal gap %d at %s is not below 2m = %d", best_gap, best, 2 * m)
    return AntipodalWitness(
        point=best,
        antipodal_point=inv(best),
        value=f(best),
        antipodal_value=f(inv(best)),
        distance=best_gap,
        lipschitz_constant=m,
        bound=2 * m,
        theorem_satisfied=satisfied,
        corollary_satisfied=best_gap <= 2 * m - 1 if m else None,
    )


def exact_antipodal_points(inv: Involution, f: GridFunction) -> List[Point]:
    """Points with f(x) = f(-x); the continuous theorem would promise one, the digital one does not."""
    return [x for x in inv.carrier.sorted_points if f(x) == f(inv(x))]


# ============================================================================
# Simplices
# ============================================================================

@lru_cache(maxsize=128)
def _cliques(image: DigitalImage) -> Tuple[Simplex, ...]:
    found = [tuple(sorted(c)) for c in nx.enumerate_all_cliques(image.graph)]
    logger.debug("enumerated %d simplices of %r", len(found), image)
    return tuple(sorted(found))


def enumerate_simplices(image: DigitalImage) -> List[Simplex]:
    """All nonempty sets of mutually adjacent points, sorted internally and as a list."""
    return list(_cliques(image))


def is_simplex(points: Iterable[Iterable[int]], adjacency: Adjacency) -> bool:
    pts = sorted({as_point(p) for p in points})
    return bool(pts) and all(adjacency.adjacent(a, b) for a, b in itertools.combinations(pts, 2))


def simplex_coincidence_witness(boundary: DigitalImage, inv: Involution, f: GridFunction) -> Simplex:
    """
    The first simplex sigma of the boundary with conv f(sigma) meeting conv f(-sigma).

    No continuity is needed; existence holds for every function on the
    boundary of a box under c_n.
    """
    if f.domain != boundary:
        raise InvalidInputError("f is not defined on the given boundary")
    _check_involution(boundary, inv)

    tested = 0
    for sigma in _cliques(boundary):
        tested += 1
        image = [f(x) for x in sigma]
        antipodal = [f(inv(x)) for x in sigma]
        if hulls_intersect(image, antipodal):
            logger.debug("coincidence simplex %s after %d hull tests", sigma, tested)
            return sigma
    raise TheoremViolation(
        "no simplex with intersecting image hulls",
        {"values": {str(p): f(p) for p in boundary.sorted_points}},
    )


def _check_t_input(sigma: Sequence[Point], m: int) -> List[Point]:
    pts = sorted({as_point(p) for p in sigma})
    if not pts:
        raise InvalidInputError("a simplex needs at least one vertex")
    if m < 0:
        raise InvalidInputError(f"m must be nonnegative, got {m}")
    if len({len(p) for p in pts}) != 1:
        raise InvalidInputError("simplex vertices mix dimensions")
    for a, b in itertools.combinations(pts, 2):
        if sum(abs(u - v) for u, v in zip(a, b)) > m:
            raise InvalidInputError(f"{a} and {b} are not c_1^{m}-adjacent", [(a, b)])
    return pts


def simplex_floor(sigma: Sequence[Point]) -> Point:
    """Coordinatewise minimum of the vertices."""
    return tuple(map(min, zip(*sigma)))


def t_simplex(sigma: Iterable[Iterable[int]], m: int) -> List[Point]:
    """
    { floor(sigma) + x : x >= 0, sum(x) <= m }, the standard c_1^m-simplex
    anchored at the coordinatewise minimum of a c_1^m-simplex sigma.

    LIMITATION: the result is pairwise within c_1 distance 2m (the points
    floor + m*e_i and floor + m*e_j are 2m apart) and need not contain sigma;
    callers that need containment must check it.
    """
    pts = _check_t_input(list(sigma), m)
    base = simplex_floor(pts)
    n = len(base)
    return sorted(
        tuple(b + o for b, o in zip(base, offset))
        for offset in itertools.product(range(m + 1), repeat=n)
        if sum(offset) <= m
    )


def t_simplex_meet(sigma: Iterable[Iterable[int]], rho: Iterable[Iterable[int]], m: int) -> Optional[Point]:
    """
    The lattice point max(floor(sigma), floor(rho)) when it lies in both
    T-simplices. The convex hulls of T(sigma) and T(rho) meet exactly when it does.
    """
    s = _check_t_input(list(sigma), m)
    r = _check_t_input(list(rho), m)
    ps, pr = simplex_floor(s), simplex_floor(r)
    if len(ps) != len(pr):
        raise InvalidInputError("simplices of different dimensions")
    top = tuple(max(a, b) for a, b in zip(ps, pr))
    if sum(t - a for t, a in zip(top, ps)) <= m and sum(t - b for t, b in zip(top, pr)) <= m:
        return top
    return None


# ============================================================================
# Boxes
# ============================================================================

class Variant(str, Enum):
    """Which higher-dimensional theorem to apply."""
    C1 = "c1"
    C1_POWER = "c1-power"
    CN_MINUS_1 = "cn-1"


def theorem_adjacencies(variant: Variant, n: int, m: int = 1) -> Tuple[Adjacency, Adjacency]:
    """(hypothesis codomain adjacency, conclusion adjacency) on Z^(n-1)."""
    if n < 2:
        raise InvalidInputError(f"boxes need dimension >= 2 for these theorems, got {n}")
    d = n - 1
    if variant == Variant.C1:
        return CK(d, 1), CK(d, 1)
    if variant == Variant.C1_POWER:
        if m < 1:
            raise InvalidInputError(f"power exponent must be positive, got {m}")
        return Power(CK(d, 1), m), Power(CK(d, 1), 2 * m)
    return CK(d, d), CK(d, d)


def _check_box_function(box: NBox, f: GridFunction, variant: Variant, m: int) -> Tuple[Adjacency, Adjacency]:
    n = box.dimension
    if f.domain != box_boundary(box, n):
        raise InvalidInputError(f"f must be defined on the boundary of the box under c_{n}")
    if f.dimension != n - 1:
        raise InvalidInputError(f"f must take values in Z^{n - 1}, got Z^{f.dimension}")
    hypothesis, conclusion = theorem_adjacencies(variant, n, m)
    breaks = discontinuities(f, hypothesis)
    if breaks:
        a, b = breaks[0]
        raise InvalidInputError(
            f"f is not (c_{n}, {hypothesis.label})-continuous: f{a}={f(a)} and f{b}={f(b)}",
            breaks,
        )
    return hypothesis, conclusion


def antipodal_witness_high_dim(
    box: NBox,
    f: GridFunction,
    variant: Variant,
    m: int = 1,
    cross_validate: bool = False,
) -> AntipodalWitness:
    """
    The lexicographically least boundary point x with f(x) adjacent-or-equal to
    f(-x) under the conclusion adjacency of the chosen theorem.

    Args:
        box: The n-box; f lives on its boundary under c_n
        f: Function into Z^(n-1)
        variant: C1, C1_POWER (with exponent m) or CN_MINUS_1
        m: Power exponent for C1_POWER, ignored otherwise
        cross_validate: Also rebuild a witness by following the proof

    Returns:
        The direct-scan witness; `distance` is measured in the hypothesis
        codomain adjacency
    """
    hypothesis, conclusion = _check_box_function(box, f, variant, m)
    inv = box_involution(box, box.dimension)

    witness = None
    for x in f.domain.sorted_points:
        if conclusion.adjacent_or_equal(f(x), f(inv(x))):
            witness = AntipodalWitness(
                point=x,
                antipodal_point=inv(x),
                value=f(x),
                antipodal_value=f(inv(x)),
                distance=hypothesis.distance(f(x), f(inv(x))),
            )
            break
    if witness is None:
        raise TheoremViolation(
            f"no boundary point with f(x) {conclusion.label}-adjacent-or-equal to f(-x)",
            {"variant": variant.value, "m": m, "values": {str(p): f(p) for p in f.domain.sorted_points}},
        )

    if cross_validate:
        proof_witness_high_dim(box, f, variant, m)
    return witness


def proof_witness_high_dim(box: NBox, f: GridFunction, variant: Variant, m: int = 1) -> AntipodalWitness:
    """
    Rebuild a witness the way the existence proofs do.

    Starting from the coincidence simplex sigma:
    - C1: c_1-simplices with meeting hulls share a vertex f(u) = f(-v), so u works.
    - C1_POWER: f(sigma) and f(-sigma) lie in L1 balls of radius m around each
      of their points; a common hull point puts every x in sigma within 2m.
      The meeting point of T(f(sigma)) and T(f(-sigma)) is recorded on the
      witness. When both T-simplices contain their generators the hulls of
      f(sigma) and f(-sigma) sit inside theirs, so a missing meet is a violation.
    - CN_MINUS_1: some f(u) is c_(n-1)-adjacent-or-equal to all of f(-sigma),
      in particular to f(-u).
    """
    hypothesis, conclusion = _check_box_function(box, f, variant, m)
    boundary = f.domain
    inv = box_involution(box, box.dimension)
    sigma = simplex_coincidence_witness(boundary, inv, f)
    values = [f(x) for x in sigma]
    antipodal_values = [f(inv(x)) for x in sigma]

    meet = None
    if variant == Variant.C1:
        candidates = [u for u in sigma if f(u) in antipodal_values]
    elif variant == Variant.C1_POWER:
        meet = t_simplex_meet(values, antipodal_values, m)
        logger.debug("T-simplex meeting point for %s: %s", sigma, meet)
        contained = set(values) <= set(t_simplex(values, m)) and set(antipodal_values) <= set(
            t_simplex(antipodal_values, m)
        )
        if meet is None and contained:
            raise TheoremViolation(
                f"T-simplices of f{sigma} and its antipodal image contain their generators but do not meet",
                {"variant": variant.value, "m": m, "sigma": sigma, "values": values, "antipodal_values": antipodal_values},
            )
        candidates = list(sigma)
    else:
        candidates = [u for u in sigma if all(conclusion.adjacent_or_equal(f(u), v) for v in antipodal_values)]

    for u in candidates:
        if conclusion.adjacent_or_equal(f(u), f(inv(u))):
            return AntipodalWitness(
                point=u,
                antipodal_point=inv(u),
                value=f(u),
                antipodal_value=f(inv(u)),
                distance=hypothesis.distance(f(u), f(inv(u))),
                method="proof",
                t_simplex_meet=meet,
            )
    raise TheoremViolation(
        f"proof reconstruction failed on simplex {sigma}",
        {"variant": variant.value, "m": m, "sigma": sigma},
    )


# ============================================================================
# The (c_1, c_1)-continuous function with no c_1 antipodal match
# ============================================================================

def _counterexample_value(p: Point) -> Point:
    x, y, z = p
    if z == -1:
        return (0, 1) if (x, y) == (-1, -1) else (0, 0)
    if z == 0:
        if (x, y) == (-1, -1):
            return (1, 1)
        if (x, y) == (1, 1):
            return (0, 0)
        return (0, 1) if y > x else (1, 0)
    return (1, 0) if (x, y) == (1, 1) else (1, 1)


def counterexample_fixture() -> Tuple[NBox, GridFunction]:
    """
    B = [-1,1]^3 and a map from its boundary (under c_3) to (Z^2, c_1) that is
    (c_1, c_1)-continuous yet never sends antipodes to c_1-adjacent-or-equal
    values, so c_1 cannot replace c_n on the domain side.
    """
    box = NBox.cube(3)
    boundary = box_boundary(box, 3)
    values = {p: _counterexample_value(p) for p in boundary.sorted_points}
    return box, GridFunction(boundary, values, CK(2, 1))


def counterexample_report() -> CounterexampleReport:
    """Re-check the three claims made about the counterexample fixture."""
    box, f = counterexample_fixture()
    inv = box_involution(box, 3)
    codomain = CK(2, 1)

    def on(k: int) -> GridFunction:
        return GridFunction(box_boundary(box, k), f.values, codomain)

    continuous = is_continuous(on(1))
    matches = [x for x in f.domain.sorted_points if codomain.adjacent_or_equal(f(x), f(inv(x)))]
    c2_breaks = discontinuities(on(2))
    c3_breaks = discontinuities(on(3))
    named_pair = ((0, 1, 0), (1, 0, 0))
    reproduced = continuous and not matches and named_pair in c2_breaks and named_pair in c3_breaks
    if not reproduced:
        logger.warning("counterexample claims not reproduced")
    return CounterexampleReport(
        box=list(box.bounds),
        c1_c1_continuous=continuous,
        antipodal_c1_matches=matches,
        c2_c1_breaks=c2_breaks,
        c3_c1_breaks=c3_breaks,
        claims_reproduced=reproduced,
    )
