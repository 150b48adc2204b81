"""
Seeded generators for the verification corpora.

Every generator takes an explicit random.Random so a corpus is reproducible
from its seed alone.
"""

import itertools
import logging
import random
from typing import Iterator

from services.lattice import CK, Adjacency, DigitalImage, digital_interval
from services.maps import GridFunction

logger = logging.getLogger(__name__)


def random_continuous_function(
    domain: DigitalImage,
    codomain: Adjacency,
    rng: random.Random,
    steps: int = 60,
) -> GridFunction:
    """
    A random (domain, codomain)-continuous function.

    Starts from the constant function at the origin of Z^d and repeatedly moves
    one value to a codomain neighbor, accepting the move only if the point stays
    adjacent-or-equal to the values at all its domain neighbors.
    """
    d = codomain.dimension
    values = {p: (0,) * d for p in domain.sorted_points}
    points = domain.sorted_points
    accepted = 0
    for _ in range(steps):
        p = rng.choice(points)
        candidate = rng.choice(codomain.neighbors(values[p]))
        if all(codomain.adjacent_or_equal(candidate, values[q]) for q in sorted(domain.graph[p])):
            values[p] = candidate
            accepted += 1
    logger.debug("random continuous function: %d/%d moves accepted", accepted, steps)
    return GridFunction(domain, values, codomain)


def random_image(rng: random.Random, max_points: int = 30, side: int = 6) -> DigitalImage:
    """A random subset of [0, side)^2 with c_1 or c_2 adjacency."""
    window = list(itertools.product(range(side), repeat=2))
    size = rng.randint(1, min(max_points, len(window)))
    return DigitalImage(rng.sample(window, size), CK(2, rng.choice((1, 2))))


def random_scalar_function(domain: DigitalImage, rng: random.Random, lo: int = -5, hi: int = 5) -> GridFunction:
    return GridFunction.from_scalars(domain, {p: rng.randint(lo, hi) for p in domain.sorted_points})


def random_interval_function(domain: DigitalImage, rng: random.Random, top: int) -> GridFunction:
    """A function with values in [0, top], so it can be composed with one on that interval."""
    return GridFunction.from_scalars(domain, {p: rng.randint(0, top) for p in domain.sorted_points})


def all_interval_functions(domain: DigitalImage, top: int) -> Iterator[GridFunction]:
    """Every function from the domain into [0, top]_Z; (top + 1)^|domain| of them, lazily."""
    points = domain.sorted_points
    for combo in itertools.product(range(top + 1), repeat=len(points)):
        yield GridFunction.from_scalars(domain, dict(zip(points, combo)))


def interval(top: int) -> DigitalImage:
    return digital_interval(0, top)
