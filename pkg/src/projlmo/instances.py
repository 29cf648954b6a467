"""Seeded random instances for the randomized suites.

Conventions, declared once so every suite is reproducible: directions have
i.i.d. standard normal entries; set parameters (centers, radii, bounds,
vertices) are drawn uniformly over fixed desk-scale ranges; dimensions
default to 1..16.  Per-trial generators are derived from (seed, indices) so
trials can run in any order, or in parallel, without changing results.
"""

from __future__ import annotations

import numpy as np

from .sets import Ball1, Ball2, BallInf, Box, PolytopeV, Simplex, Singleton

DIM_RANGE = (1, 16)
RADIUS_RANGE = (0.2, 2.5)


def rng_for(*key: int) -> np.random.Generator:
    """Deterministic generator derived from an integer key tuple."""
    return np.random.default_rng(key)


def random_direction(rng, dim: int) -> np.ndarray:
    return rng.standard_normal(dim)


def random_set(rng, dim_range=DIM_RANGE, kinds=None):
    """Draw a catalog set with uniformly random kind and parameters."""
    if kinds is None:
        kinds = ("box", "ball2", "ball1", "ballinf", "simplex", "polytope", "singleton")
    kind = kinds[int(rng.integers(0, len(kinds)))]
    dim = int(rng.integers(dim_range[0], dim_range[1] + 1))
    lo, hi = RADIUS_RANGE
    if kind == "box":
        lower = rng.uniform(-2.0, 0.0, size=dim)
        upper = rng.uniform(0.0, 2.0, size=dim)
        return Box(lower, upper)
    if kind == "ball2":
        return Ball2(rng.uniform(-2.0, 2.0, size=dim), rng.uniform(lo, hi))
    if kind == "ball1":
        return Ball1(rng.uniform(lo, hi), dim)
    if kind == "ballinf":
        return BallInf(rng.uniform(lo, hi), dim)
    if kind == "simplex":
        return Simplex(dim)
    if kind == "polytope":
        return random_polytope(rng, dim_range=(dim_range[0], min(dim_range[1], 8)))
    if kind == "singleton":
        return Singleton(rng.uniform(-2.0, 2.0, size=dim))
    raise ValueError(f"unknown kind {kind!r}")


def random_polytope(rng, dim_range=(1, 6), max_vertices: int = 12) -> PolytopeV:
    dim = int(rng.integers(dim_range[0], dim_range[1] + 1))
    m = int(rng.integers(1, max_vertices + 1))
    return PolytopeV(rng.uniform(-2.0, 2.0, size=(m, dim)))


def direction_with_distinct_scores(rng, polytope: PolytopeV, margin: float = 1e-3):
    """A direction whose inner products with the vertices are pairwise
    distinct by at least margin * (1 + ||x||) * (1 + mu_C).

    Distinctness makes the optimal face a single vertex, the generic case
    for the exactness search.  Raises after too many rejections (only
    possible with duplicated vertices).
    """
    V = polytope.vertex_array
    mu = polytope.constants().norm_bound
    for _ in range(1000):
        x = rng.standard_normal(polytope.dim)
        # exact duplicate vertices always score identically; they share a
        # face anyway, so only distinct scores need separating
        scores = np.unique(V @ x)
        sep = margin * (1.0 + float(np.linalg.norm(x))) * (1.0 + mu)
        if scores.shape[0] == 1 or np.min(np.diff(scores)) >= sep:
            return x
    raise ValueError("could not separate the vertex scores")
