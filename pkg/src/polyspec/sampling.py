"""Seeded random lattice simplices, for property tests and benchmarks."""

from __future__ import annotations

import random
from typing import Iterable

from .errors import DegenerateSimplex, OriginNotInterior
from .geometry import Simplex


def random_simplex(
    rng: random.Random,
    dim: int,
    max_coord: int = 6,
    require_reduced: bool = True,
    max_tries: int = 100_000,
) -> Simplex:
    """Rejection-sample a valid simplex with |coordinates| <= max_coord.

    Draws dim+1 uniform integer vertices and keeps the first draw that is
    affinely independent, has the origin strictly interior and, if asked,
    has coprime weights.
    """
    for _ in range(max_tries):
        vertices = tuple(
            tuple(rng.randint(-max_coord, max_coord) for _ in range(dim))
            for _ in range(dim + 1)
        )
        try:
            simplex = Simplex(vertices)
        except (DegenerateSimplex, OriginNotInterior):
            continue
        if require_reduced and not simplex.weight.is_reduced:
            continue
        return simplex
    raise RuntimeError(
        f"no valid simplex found in {max_tries} draws (dim={dim}, max_coord={max_coord})"
    )


def random_reduced_simplices(
    seed: int,
    count: int,
    dims: Iterable[int] = (2, 3),
    max_coord: int = 6,
) -> list[Simplex]:
    """Deterministic batch of reduced simplices, cycling through ``dims``."""
    rng = random.Random(seed)
    dims = tuple(dims)
    return [
        random_simplex(rng, dims[i % len(dims)], max_coord=max_coord)
        for i in range(count)
    ]
