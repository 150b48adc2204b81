"""
Integer-lattice points, adjacency relations and digital images.

A digital image is a finite point set together with a symmetric antireflexive
adjacency relation. Three kinds of relation are supported:

- CK(n, k): points of Z^n that differ by at most 1 in at most k coordinates
- Power(base, m): distinct points joined by a base-path of length m
- Explicit: an arbitrary finite simple graph

Paths may pause (consecutive entries adjacent-or-equal), so "a path of length m
exists" is the same as "the shortest-path distance is at most m". All
set-valued results are returned sorted lexicographically.

LIMITATIONS:
- Images are finite; Z^n itself only appears as the ambient space of CK/Power
  distances, which are computed in closed form or by bounded BFS.
- No weighted graphs.
"""

import itertools
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from services.errors import InvalidInputError

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]


def as_point(coords: Iterable[int]) -> Point:
    """Normalize any integer sequence into a hashable lattice point."""
    return tuple(int(c) for c in coords)


class Adjacency(ABC):
    """A symmetric antireflexive relation, either on Z^n or on a finite vertex set."""

    @property
    @abstractmethod
    def dimension(self) -> Optional[int]:
        """Lattice dimension, or None for explicit graphs."""

    @property
    @abstractmethod
    def label(self) -> str:
        """Short name used in reports (c_1, c_1^2, explicit)."""

    @abstractmethod
    def adjacent(self, p: Point, q: Point) -> bool:
        ...

    @abstractmethod
    def distance(self, p: Point, q: Point) -> Optional[int]:
        """Shortest path length over the whole ambient space; None if unreachable."""

    @abstractmethod
    def neighbors(self, p: Point) -> List[Point]:
        """Ambient neighbors of p, sorted."""

    def check(self, p: Point) -> None:
        if self.dimension is not None and len(p) != self.dimension:
            raise InvalidInputError(
                f"point {p} has dimension {len(p)}, adjacency {self.label} expects {self.dimension}"
            )

    def adjacent_or_equal(self, p: Point, q: Point) -> bool:
        return p == q or self.adjacent(p, q)

    def reach(self, p: Point, radius: int) -> FrozenSet[Point]:
        """All points within path distance `radius` of p (p included), by BFS."""
        self.check(p)
        seen = {p}
        frontier = [p]
        for _ in range(radius):
            nxt = []
            for u in frontier:
                for v in self.neighbors(u):
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        return frozenset(seen)

    def power(self, m: int) -> "Power":
        return Power(self, m)


@lru_cache(maxsize=None)
def _ck_offsets(n: int, k: int) -> Tuple[Point, ...]:
    return tuple(
        d for d in itertools.product((-1, 0, 1), repeat=n)
        if 1 <= sum(1 for c in d if c) <= k
    )


@lru_cache(maxsize=None)
def _ball_offsets(adjacency: "Adjacency", radius: int) -> FrozenSet[Point]:
    origin = (0,) * adjacency.dimension
    return Adjacency.reach(adjacency, origin, radius)


@dataclass(frozen=True)
class CK(Adjacency):
    """c_k adjacency on Z^n."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 1 or not 1 <= self.k <= self.n:
            raise InvalidInputError(f"c_k on Z^n needs 1 <= k <= n, got n={self.n}, k={self.k}")

    @property
    def dimension(self) -> int:
        return self.n

    @property
    def label(self) -> str:
        return f"c_{self.k}"

    def adjacent(self, p: Point, q: Point) -> bool:
        self.check(p)
        self.check(q)
        changed = 0
        for a, b in zip(p, q):
            d = abs(a - b)
            if d > 1:
                return False
            if d:
                changed += 1
        return 1 <= changed <= self.k

    def distance(self, p: Point, q: Point) -> int:
        # Each step moves every coordinate by at most 1 and at most k coordinates
        self.check(p)
        self.check(q)
        diffs = [abs(a - b) for a, b in zip(p, q)]
        return max(max(diffs), -(-sum(diffs) // self.k))

    def neighbors(self, p: Point) -> List[Point]:
        self.check(p)
        return [tuple(a + d for a, d in zip(p, off)) for off in _ck_offsets(self.n, self.k)]

    def reach(self, p: Point, radius: int) -> FrozenSet[Point]:
        self.check(p)
        return frozenset(tuple(a + d for a, d in zip(p, off)) for off in _ball_offsets(self, radius))


@dataclass(frozen=True)
class Power(Adjacency):
    """
    lambda^m: distinct points joined by a lambda-path of length m.

    Equality is excluded so the relation stays antireflexive.
    """

    base: Adjacency
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise InvalidInputError(f"power exponent must be positive, got {self.m}")

    @property
    def dimension(self) -> Optional[int]:
        return self.base.dimension

    @property
    def label(self) -> str:
        inner = f"({self.base.label})" if isinstance(self.base, Power) else self.base.label
        return f"{inner}^{self.m}"

    def check(self, p: Point) -> None:
        self.base.check(p)

    def adjacent(self, p: Point, q: Point) -> bool:
        # Decided from the BFS ball, independently of distance()
        self.check(q)
        return p != q and q in self.base.reach(p, self.m)

    def distance(self, p: Point, q: Point) -> Optional[int]:
        d = self.base.distance(p, q)
        if d is None:
            return None
        return -(-d // self.m)

    def neighbors(self, p: Point) -> List[Point]:
        return sorted(self.base.reach(p, self.m) - {p})

    def reach(self, p: Point, radius: int) -> FrozenSet[Point]:
        return self.base.reach(p, self.m * radius)


@dataclass(frozen=True)
class Explicit(Adjacency):
    """A finite simple graph given by its vertices and unordered edges."""

    vertices: FrozenSet[Point]
    edges: FrozenSet[FrozenSet[Point]]

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 2:
                raise InvalidInputError(f"edge {sorted(e)} is a loop; adjacency must be antireflexive")
            if not e <= self.vertices:
                raise InvalidInputError(f"edge {sorted(e)} joins points outside the vertex set")

    @classmethod
    def from_edges(cls, vertices: Iterable[Iterable[int]], edges: Iterable[Tuple[Iterable[int], Iterable[int]]]) -> "Explicit":
        return cls(
            frozenset(as_point(v) for v in vertices),
            frozenset(frozenset((as_point(a), as_point(b))) for a, b in edges),
        )

    @cached_property
    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(sorted(self.vertices))
        g.add_edges_from(tuple(e) for e in self.edges)
        return g

    @property
    def dimension(self) -> None:
        return None

    @property
    def label(self) -> str:
        return "explicit"

    def check(self, p: Point) -> None:
        if p not in self.vertices:
            raise InvalidInputError(f"point {p} is not a vertex of the explicit graph")

    def adjacent(self, p: Point, q: Point) -> bool:
        self.check(p)
        self.check(q)
        return self.graph.has_edge(p, q)

    def distance(self, p: Point, q: Point) -> Optional[int]:
        self.check(p)
        self.check(q)
        try:
            return nx.shortest_path_length(self.graph, p, q)
        except nx.NetworkXNoPath:
            return None

    def neighbors(self, p: Point) -> List[Point]:
        self.check(p)
        return sorted(self.graph[p])

    def reach(self, p: Point, radius: int) -> FrozenSet[Point]:
        self.check(p)
        return frozenset(nx.single_source_shortest_path_length(self.graph, p, cutoff=radius))


class DigitalImage:
    """
    A finite point set with an adjacency relation, i.e. the pair (X, kappa).

    The value is immutable; the adjacency graph and BFS tables are built lazily
    and cached on the instance.
    """

    def __init__(self, points: Iterable[Iterable[int]], adjacency: Adjacency):
        self.points: FrozenSet[Point] = frozenset(as_point(p) for p in points)
        self.adjacency = adjacency

        dims = {len(p) for p in self.points}
        if len(dims) > 1:
            raise InvalidInputError(f"points of one image must share a dimension, got {sorted(dims)}")
        for p in self.points:
            adjacency.check(p)

        self._bfs: Dict[Point, Dict[Point, int]] = {}
        self._paths: Dict[Tuple[Point, Point], Optional[List[Point]]] = {}
        self._hash = hash((self.points, adjacency))

    def __repr__(self) -> str:
        return f"DigitalImage({len(self.points)} points, {self.adjacency.label})"

    def __eq__(self, other) -> bool:
        return isinstance(other, DigitalImage) and self.points == other.points and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return self._hash

    def __contains__(self, p) -> bool:
        return p in self.points

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.sorted_points)

    @cached_property
    def sorted_points(self) -> List[Point]:
        return sorted(self.points)

    @cached_property
    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.sorted_points)
        for p in self.sorted_points:
            for q in self.adjacency.neighbors(p):
                if q in self.points and p < q:
                    g.add_edge(p, q)
        logger.debug("built adjacency graph of %r: %d edges", self, g.number_of_edges())
        return g

    @cached_property
    def adjacent_pairs(self) -> List[Tuple[Point, Point]]:
        """Every adjacent pair once, as (p, q) with p < q, in lexicographic order."""
        return sorted((min(a, b), max(a, b)) for a, b in self.graph.edges)

    def require(self, p: Point) -> Point:
        p = as_point(p)
        if p not in self.points:
            raise InvalidInputError(f"point {p} is not in the image")
        return p

    def distances_from(self, p: Point) -> Dict[Point, int]:
        p = self.require(p)
        if p not in self._bfs:
            self._bfs[p] = nx.single_source_shortest_path_length(self.graph, p)
        return self._bfs[p]

    def path_distance(self, p: Point, q: Point) -> Optional[int]:
        """Length of a shortest path inside the image; None across components."""
        q = self.require(q)
        return self.distances_from(p).get(q)

    def shortest_path(self, p: Point, q: Point) -> Optional[List[Point]]:
        """
        A shortest path from p to q; at every step the lexicographically least
        neighbor that gets closer to q is taken, so the result is deterministic.
        """
        p = self.require(p)
        key = (p, as_point(q))
        if key not in self._paths:
            self._paths[key] = self._walk(p, key[1])
        return self._paths[key]

    def _walk(self, p: Point, q: Point) -> Optional[List[Point]]:
        to_q = self.distances_from(q)
        if p not in to_q:
            return None
        path = [p]
        while path[-1] != q:
            cur = path[-1]
            path.append(min(v for v in self.graph[cur] if to_q.get(v) == to_q[cur] - 1))
        return path

    def connected_components(self) -> List[Tuple[Point, ...]]:
        blocks = [tuple(sorted(c)) for c in nx.connected_components(self.graph)]
        return sorted(blocks)

    @cached_property
    def connected(self) -> bool:
        return len(self.points) > 0 and nx.is_connected(self.graph)

    def is_connected(self) -> bool:
        return self.connected


def adjacent(adjacency: Adjacency, p: Iterable[int], q: Iterable[int]) -> bool:
    return adjacency.adjacent(as_point(p), as_point(q))


def path_distance(image: DigitalImage, p: Iterable[int], q: Iterable[int]) -> Optional[int]:
    return image.path_distance(as_point(p), as_point(q))


def connected_components(image: DigitalImage) -> List[Tuple[Point, ...]]:
    return image.connected_components()


def digital_interval(lo: int, hi: int) -> DigitalImage:
    """[lo, hi]_Z with c_1 adjacency."""
    return DigitalImage(((i,) for i in range(lo, hi + 1)), CK(1, 1))
