"""
Finite-window check of regularity for c_k on Z^n.

An adjacency is regular when, for any two simplices sigma and rho whose convex
hulls meet, some vertex of sigma is adjacent-or-equal to every vertex of rho.

A c_k-simplex has coordinatewise spread at most 1, so it sits in a unit box.
Two simplices with meeting hulls therefore sit in unit boxes whose corners
differ by an offset in {-1, 0, 1}^n, and by translation invariance it is
enough to take sigma in the unit box at one origin. The check is a complete
decision for each (n, k).

LIMITATIONS:
- n <= 3. For n = 4 the clique lists grow past 10^4 per box and the pair scan
  is impractical without symmetry reduction.
"""

import itertools
import logging
import time
from typing import FrozenSet, Iterable, List, Optional, Sequence

from models import RegularityFinding, RegularityStatistics, ViolationPair
from services.borsuk_ulam import Simplex, enumerate_simplices
from services.errors import InvalidInputError, TheoremViolation, UnsupportedError
from services.hulls import boxes_overlap, hulls_intersect
from services.lattice import CK, Adjacency, DigitalImage, Point, as_point

logger = logging.getLogger(__name__)

MAX_DIMENSION = 3


def _unit_box(corner: Point, adjacency: Adjacency) -> DigitalImage:
    return DigitalImage(itertools.product(*((c, c + 1) for c in corner)), adjacency)


def vertex_condition(adjacency: Adjacency, sigma: Sequence[Point], rho: Sequence[Point]) -> bool:
    """Some vertex of sigma is adjacent-or-equal to all of rho."""
    return any(all(adjacency.adjacent_or_equal(x, y) for y in rho) for x in sigma)


def violates(adjacency: Adjacency, sigma: Sequence[Point], rho: Sequence[Point]) -> bool:
    """Hulls meet but the vertex condition fails; recomputed from scratch."""
    return hulls_intersect(sigma, rho) and not vertex_condition(adjacency, sigma, rho)


def check_regularity(n: int, k: int, origin: Optional[Iterable[int]] = None) -> RegularityFinding:
    """
    Decide regularity of c_k on Z^n by scanning the window around one unit box.

    Args:
        n: Lattice dimension, 1 <= n <= 3
        k: Adjacency parameter, 1 <= k <= n
        origin: Corner of the unit box holding sigma (default the origin)

    Returns:
        RegularityFinding; on violation the lexicographically least (sigma, rho)
    """
    if n > MAX_DIMENSION:
        raise UnsupportedError(f"regularity checks support n <= {MAX_DIMENSION}, got n={n}")
    adjacency = CK(n, k)
    corner = as_point(origin) if origin is not None else (0,) * n
    if len(corner) != n:
        raise InvalidInputError(f"window origin {corner} is not a point of Z^{n}")

    started = time.perf_counter()
    sigmas = enumerate_simplices(_unit_box(corner, adjacency))
    rhos: List[Simplex] = sorted({
        rho
        for offset in itertools.product((-1, 0, 1), repeat=n)
        for rho in enumerate_simplices(_unit_box(tuple(c + o for c, o in zip(corner, offset)), adjacency))
    })
    rho_sets = [frozenset(rho) for rho in rhos]
    closed: dict = {}

    def neighborhood(x: Point) -> FrozenSet[Point]:
        if x not in closed:
            closed[x] = adjacency.reach(x, 1)
        return closed[x]

    logger.info("regularity c_%d on Z^%d: %d x %d simplex pairs", k, n, len(sigmas), len(rhos))

    pairs = hits = hull_tests = 0
    found = None
    for sigma in sigmas:
        around = [neighborhood(x) for x in sigma]
        for rho, rho_set in zip(rhos, rho_sets):
            pairs += 1
            # Vertex condition first: it is a few set inclusions, the hull test is an LP
            if any(rho_set <= nb for nb in around):
                hits += 1
                continue
            if not boxes_overlap(sigma, rho):
                continue
            hull_tests += 1
            if hulls_intersect(sigma, rho):
                found = (sigma, rho)
                break
        if found:
            break

    runtime = time.perf_counter() - started
    stats = RegularityStatistics(
        sigma_count=len(sigmas),
        rho_count=len(rhos),
        pairs_examined=pairs,
        vertex_condition_hits=hits,
        hull_tests=hull_tests,
        runtime_seconds=runtime,
    )

    if found is None:
        logger.info("c_%d on Z^%d regular in window (%d hull tests, %.2fs)", k, n, hull_tests, runtime)
        return RegularityFinding(dimension=n, k=k, origin=corner, verdict="regular-in-window", statistics=stats)

    sigma, rho = found
    if not violates(adjacency, sigma, rho):
        raise TheoremViolation("reported regularity violation does not re-verify", {"sigma": sigma, "rho": rho})
    logger.warning("c_%d on Z^%d is not regular: sigma=%s rho=%s", k, n, sigma, rho)
    return RegularityFinding(
        dimension=n,
        k=k,
        origin=corner,
        verdict="violation",
        violation_pair=ViolationPair(sigma=list(sigma), rho=list(rho)),
        statistics=stats,
    )


def finding_document(finding: RegularityFinding, timing: bool = False) -> dict:
    """JSON-ready finding; runtime is left out unless asked for so the output is byte-stable."""
    exclude = None if timing else {"statistics": {"runtime_seconds"}}
    return finding.model_dump(mode="json", exclude=exclude)
