"""Seeded random polytopes and unimodular maps for tests and benchmarks."""

from __future__ import annotations

import random

from .lattice import AffineUnimodularMap, LatticePolytope, affine_dimension, compose


def random_polytope(rng: random.Random, dim: int, coord_max: int,
                    n_points: int | None = None, max_tries: int = 10_000) -> LatticePolytope:
    """Uniform points in ``[0, coord_max]^dim``, resampled until full-dimensional."""
    if coord_max < 1:
        raise ValueError("coord_max must be at least 1 for a full-dimensional sample")
    for _ in range(max_tries):
        n = n_points if n_points is not None else rng.randint(dim + 1, 2 * dim + 2)
        P = LatticePolytope([tuple(rng.randint(0, coord_max) for _ in range(dim))
                             for _ in range(n)])
        if affine_dimension(P) == dim:
            return P
    raise RuntimeError("could not sample a full-dimensional polytope")


def random_unimodular(rng: random.Random, dim: int, steps: int = 4,
                      max_shift: int = 3) -> AffineUnimodularMap:
    """Product of random elementary shears, coordinate swaps and sign flips."""
    T = AffineUnimodularMap.shift(tuple(rng.randint(-max_shift, max_shift) for _ in range(dim)))
    for _ in range(steps):
        kind = rng.randrange(3)
        rows = [[int(i == j) for j in range(dim)] for i in range(dim)]
        i, j = rng.sample(range(dim), 2) if dim > 1 else (0, 0)
        if kind == 0 and dim > 1:
            rows[i][j] = rng.choice((-2, -1, 1, 2))
        elif kind == 1 and dim > 1:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            rows[i][i] = -1
        T = compose(AffineUnimodularMap(tuple(map(tuple, rows))), T)
    return T
