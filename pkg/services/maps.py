"""
Grid functions between digital images: continuity, Lipschitz constants and the
Lipschitz algebra (sums, scalar multiples, composition, powers).

Distances in the codomain are measured over the whole ambient space of the
codomain adjacency (Z^d for CK/Power), not inside the value set of f.
"""

import logging
from typing import Iterable, List, Mapping, Optional, Tuple

from models import LipschitzReport, PairGap
from services.errors import DisconnectedCodomainError, InvalidInputError
from services.lattice import CK, Adjacency, DigitalImage, Point, as_point

logger = logging.getLogger(__name__)

Z_C1 = CK(1, 1)


class GridFunction:
    """
    A total map f from a digital image into a codomain carrying `codomain` adjacency.

    Args:
        domain: The digital image f is defined on
        values: Mapping point -> value; every domain point must be present
        codomain: Adjacency of the codomain (CK(1, 1) for brightness-like maps)
    """

    def __init__(self, domain: DigitalImage, values: Mapping, codomain: Adjacency = Z_C1):
        self.domain = domain
        self.codomain = codomain
        self.values = {}
        for p in domain.sorted_points:
            try:
                v = values[p]
            except KeyError:
                raise InvalidInputError(f"function is not defined at {p}")
            v = as_point(v)
            codomain.check(v)
            self.values[p] = v

        dims = {len(v) for v in self.values.values()}
        if len(dims) > 1:
            raise InvalidInputError(f"function values have mixed dimensions {sorted(dims)}")
        self.dimension = dims.pop() if dims else (codomain.dimension or 0)
        self._lipschitz: Optional[LipschitzReport] = None

    @classmethod
    def from_scalars(cls, domain: DigitalImage, values: Mapping, codomain: Adjacency = Z_C1) -> "GridFunction":
        """Build a Z-valued function from plain integers."""
        return cls(domain, {as_point(p): (int(v),) for p, v in values.items()}, codomain)

    def __call__(self, p: Point) -> Point:
        return self.values[p]

    def __repr__(self) -> str:
        return f"GridFunction({self.domain!r} -> Z^{self.dimension}, {self.codomain.label})"

    def scalar(self, p: Point) -> int:
        return self.values[p][0]

    def value_set(self) -> List[Point]:
        return sorted(set(self.values.values()))

    def with_codomain(self, codomain: Adjacency) -> "GridFunction":
        return GridFunction(self.domain, self.values, codomain)


def discontinuities(f: GridFunction, codomain: Optional[Adjacency] = None) -> List[Tuple[Point, Point]]:
    """Adjacent pairs whose images are neither equal nor adjacent, in lexicographic order."""
    target = codomain or f.codomain
    return [(a, b) for a, b in f.domain.adjacent_pairs if not target.adjacent_or_equal(f(a), f(b))]


def is_continuous(f: GridFunction, codomain: Optional[Adjacency] = None) -> bool:
    target = codomain or f.codomain
    return all(target.adjacent_or_equal(f(a), f(b)) for a, b in f.domain.adjacent_pairs)


def min_lipschitz(f: GridFunction) -> LipschitzReport:
    """
    Least m such that adjacent points map to points at codomain distance <= m.

    Domains without adjacent pairs get 0. If an adjacent pair maps into two
    codomain components the report has no constant and names that pair.
    The report is cached on f, which is immutable.
    """
    if f._lipschitz is None:
        f._lipschitz = _lipschitz_report(f)
    return f._lipschitz


def _lipschitz_report(f: GridFunction) -> LipschitzReport:
    best: Optional[PairGap] = None
    for a, b in f.domain.adjacent_pairs:
        gap = f.codomain.distance(f(a), f(b))
        if gap is None:
            return LipschitzReport(constant=None, witness=PairGap(a=a, b=b, gap=None))
        if best is None or gap > best.gap:
            best = PairGap(a=a, b=b, gap=gap)
    return LipschitzReport(constant=best.gap if best else 0, witness=best)


def require_lipschitz(f: GridFunction) -> int:
    report = min_lipschitz(f)
    if report.disconnected:
        raise DisconnectedCodomainError(report.witness.a, report.witness.b)
    return report.constant


def has_lipschitz(f: GridFunction, m: int) -> bool:
    report = min_lipschitz(f)
    return not report.disconnected and report.constant <= m


def pointwise_combine(f: GridFunction, g: GridFunction, c1: int, c2: int) -> GridFunction:
    """x -> c1*f(x) + c2*g(x) for Z-valued f, g on the same image."""
    if f.domain != g.domain:
        raise InvalidInputError("pointwise combination needs functions on the same digital image")
    if f.dimension != 1 or g.dimension != 1:
        raise InvalidInputError("pointwise combination is defined for Z-valued functions only")
    return GridFunction.from_scalars(
        f.domain,
        {p: c1 * f.scalar(p) + c2 * g.scalar(p) for p in f.domain.sorted_points},
        f.codomain,
    )


def compose(g: GridFunction, f: GridFunction) -> GridFunction:
    """f o g, where g must land in f's domain under the adjacency that domain carries."""
    if g.codomain != f.domain.adjacency:
        raise InvalidInputError(
            f"inner codomain adjacency {g.codomain.label} differs from the outer domain adjacency {f.domain.adjacency.label}"
        )
    outside = [v for v in g.value_set() if v not in f.domain]
    if outside:
        raise InvalidInputError(f"values {outside[:5]} of the inner function are outside the outer domain")
    return GridFunction(g.domain, {p: f(g(p)) for p in g.domain.sorted_points}, f.codomain)


def power_continuity_equivalent(f: GridFunction, m: int) -> bool:
    """
    Whether "f has Lipschitz constant m" and "f is (kappa, lambda^m)-continuous"
    agree. Both sides are computed independently; True on every input.
    """
    lipschitz_side = has_lipschitz(f, m)
    continuity_side = is_continuous(f, f.codomain.power(m))
    if lipschitz_side != continuity_side:
        logger.warning("power/Lipschitz disagreement for %r at m=%d", f, m)
    return lipschitz_side == continuity_side


def scalar_function(domain: DigitalImage, values: Iterable[int]) -> GridFunction:
    """Z-valued function taking `values` on the domain points in sorted order."""
    return GridFunction.from_scalars(domain, dict(zip(domain.sorted_points, values)))
