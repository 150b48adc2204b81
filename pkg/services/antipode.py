"""
Free involutions: the cycle C_n with its half-turn, n-boxes with their boundary
and point reflection, and validation of arbitrary involutions.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple, Union

from models import InvolutionReport
from services.errors import InvalidInputError, NotAnInvolutionError
from services.lattice import CK, DigitalImage, Explicit, Point, as_point

logger = logging.getLogger(__name__)


class Cycle:
    """C_n as an explicit graph on the points (0,), ..., (n-1,)."""

    def __init__(self, n: int):
        if n < 4:
            raise InvalidInputError(f"a digital cycle needs at least 4 points, got {n}")
        self.n = n
        vertices = [(i,) for i in range(n)]
        edges = [((i,), ((i + 1) % n,)) for i in range(n)]
        self.image = DigitalImage(vertices, Explicit.from_edges(vertices, edges))

    def __repr__(self) -> str:
        return f"Cycle({self.n})"

    def point(self, i: int) -> Point:
        return (i % self.n,)


@dataclass(frozen=True)
class NBox:
    """
    [a_1, b_1]_Z x ... x [a_n, b_n]_Z with a_i < b_i in every coordinate.

    Strict bounds keep the center in the interior, so the reflection through it
    is fixed-point free on the boundary.
    """

    bounds: Tuple[Tuple[int, int], ...]

    def __init__(self, bounds: Iterable[Tuple[int, int]]):
        bounds = tuple((int(a), int(b)) for a, b in bounds)
        if not bounds:
            raise InvalidInputError("a box needs at least one coordinate")
        for i, (a, b) in enumerate(bounds):
            if a >= b:
                raise InvalidInputError(f"degenerate box: coordinate {i} has bounds [{a}, {b}]")
        object.__setattr__(self, "bounds", bounds)

    @classmethod
    def cube(cls, n: int, lo: int = -1, hi: int = 1) -> "NBox":
        return cls([(lo, hi)] * n)

    @property
    def dimension(self) -> int:
        return len(self.bounds)

    def points(self) -> List[Point]:
        return list(itertools.product(*(range(a, b + 1) for a, b in self.bounds)))

    def on_boundary(self, p: Point) -> bool:
        return any(x == a or x == b for x, (a, b) in zip(p, self.bounds))

    def boundary_points(self) -> List[Point]:
        return [p for p in self.points() if self.on_boundary(p)]

    def reflect(self, p: Point) -> Point:
        return tuple(a + b - x for x, (a, b) in zip(p, self.bounds))


class Involution:
    """
    A proposed antipodal map on a digital image.

    The map may be given as a mapping or a callable; it is tabulated on the
    carrier at construction and validated lazily (see `report`).
    """

    def __init__(self, carrier: DigitalImage, mapping: Union[Mapping, Callable[[Point], Point]]):
        self.carrier = carrier
        lookup = mapping if callable(mapping) else mapping.get
        self.table: Dict[Point, Point] = {}
        for p in carrier.sorted_points:
            q = lookup(p)
            if q is not None:
                self.table[p] = as_point(q)

    def __call__(self, p: Point) -> Point:
        return self.table[p]

    def __repr__(self) -> str:
        return f"Involution(on {self.carrier!r})"

    @cached_property
    def report(self) -> InvolutionReport:
        return validate_involution(self)

    def require_valid(self) -> "Involution":
        if not self.report.ok:
            raise NotAnInvolutionError("not a free continuous involution: " + "; ".join(self.report.failures))
        return self


def _describe(label: str, offenders: List) -> str:
    more = f" (and {len(offenders) - 1} more)" if len(offenders) > 1 else ""
    return f"{label} at {offenders[0]}{more}"


def validate_involution(inv: Involution) -> InvolutionReport:
    """Check totality, tau(tau(x)) = x, freeness and continuity, with the first witness of each failure."""
    carrier = inv.carrier
    table = inv.table
    failures = []

    undefined = [p for p in carrier.sorted_points if table.get(p) not in carrier]
    if undefined:
        failures.append(_describe("not total: no image in the carrier", undefined))

    defined = [p for p in carrier.sorted_points if p not in undefined]
    not_involutive = [p for p in defined if table.get(table[p]) != p]
    if not_involutive:
        failures.append(_describe("not an involution: tau(tau(x)) != x", not_involutive))

    fixed = [p for p in defined if table[p] == p]
    if fixed:
        failures.append(_describe("not free: fixed point", fixed))

    adjacency = carrier.adjacency
    broken = [
        (a, b) for a, b in carrier.adjacent_pairs
        if a in table and b in table and table[a] in carrier and table[b] in carrier
        and not adjacency.adjacent_or_equal(table[a], table[b])
    ]
    if broken:
        failures.append(_describe("not continuous: adjacent pair", broken))

    report = InvolutionReport(
        total=not undefined,
        involutive=not not_involutive,
        free=not fixed,
        continuous=not broken,
        failures=failures,
    )
    logger.debug("validated %r: ok=%s", inv, report.ok)
    return report


def cycle_antipode(cycle: Cycle) -> Involution:
    """c_i -> c_{i + n/2}; only an involution for even n."""
    half = cycle.n // 2
    if cycle.n % 2:
        back = (2 * half) % cycle.n
        raise NotAnInvolutionError(
            f"C_{cycle.n} has odd length: the half-turn sends c_0 to c_{half} and back to c_{back}, not c_0"
        )
    return Involution(cycle.image, lambda p: cycle.point(p[0] + half))


@lru_cache(maxsize=64)
def box_boundary(box: NBox, k: Optional[int] = None) -> DigitalImage:
    """The boundary of the box with c_k adjacency restricted to it (k defaults to n)."""
    n = box.dimension
    return DigitalImage(box.boundary_points(), CK(n, k or n))


@lru_cache(maxsize=64)
def box_involution(box: NBox, k: Optional[int] = None) -> Involution:
    """The reflection through the box center, restricted to the boundary."""
    inv = Involution(box_boundary(box, k), box.reflect)
    return inv.require_valid()
