"""Brute-force lattice size through an inscribed-ball bound.

If a ball of radius R sits inside P then every direction v has width at
least ``2 |v| R``.  So only finitely many directions can have width below
a given ``l``, and a unimodular matrix squeezing P into ``[0, l-1]^d`` must
take all its rows from them.  The search below enumerates those directions
and looks for row sets of determinant ±1.

This is slow but shares nothing with the shear-based algorithms, which is
why the test-suite uses it as their oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Sequence

from . import intmat
from .hull import DegenerateHullError, convex_hull
from .lattice import (
    AffineUnimodularMap,
    LatticePolytope,
    SizeCertificate,
    Vector,
    certificate,
    compose,
    is_primitive,
    reduce_dimension,
    width,
)

SUPPORTED_DIMS = (2, 3)


class UnsupportedDimensionError(ValueError):
    pass


class BudgetExhausted(RuntimeError):
    """The subset search hit its cap before deciding."""

    def __init__(self, examined: int, best: int | None = None):
        super().__init__(f"search budget exhausted after {examined} subsets")
        self.examined = examined
        self.best = best


@dataclass(frozen=True)
class InscribedBall:
    center: tuple[Fraction, ...]
    radius_squared: Fraction

    def contains_direction_bound(self, v: Sequence[int], l: int) -> bool:
        """Exact test of ``|v| <= (l-1) / (2R)``."""
        return 4 * self.radius_squared * sum(x * x for x in v) <= (l - 1) ** 2


@dataclass(frozen=True)
class CandidatePool:
    directions: tuple[tuple[Vector, int], ...]
    bound_squared: Fraction
    l: int

    def __len__(self):
        return len(self.directions)

    def filtered(self, cap: int) -> "CandidatePool":
        """Directions whose width is at most ``cap - 1``."""
        return CandidatePool(tuple(e for e in self.directions if e[1] < cap),
                             self.bound_squared, self.l)


def _check_dim(P: LatticePolytope):
    if P.dim not in SUPPORTED_DIMS:
        raise UnsupportedDimensionError(f"dimension {P.dim} is not supported (need 2 or 3)")


def inscribed_ball(P: LatticePolytope) -> InscribedBall:
    """Ball about the solid centroid touching the nearest facet plane."""
    _check_dim(P)
    try:
        h = convex_hull(P)
    except DegenerateHullError as exc:
        raise DegenerateHullError(f"{exc}; flatten with reduce_dimension first") from None
    M = h.centroid
    r2 = min(f.slack(M) ** 2 / sum(x * x for x in f.normal) for f in h.facets)
    return InscribedBall(M, r2)


def candidate_directions(P: LatticePolytope, l: int, ball: InscribedBall) -> CandidatePool:
    """All primitive v (first nonzero coordinate positive) with ``|v| <= (l-1)/(2R)``.

    Any direction of width at most ``l - 1`` is in the pool.
    """
    d = P.dim
    if l <= 1:
        return CandidatePool((), Fraction(0), l)
    bound2 = Fraction((l - 1) ** 2) / (4 * ball.radius_squared)
    B = isqrt(bound2.numerator // bound2.denominator)
    found = []
    for v in itertools.product(range(-B, B + 1), repeat=d):
        first = next((x for x in v if x), 0)
        if first <= 0 or sum(x * x for x in v) > bound2 or not is_primitive(v):
            continue
        found.append((v, width(P, v)))
    found.sort(key=lambda e: (e[1], e[0]))
    return CandidatePool(tuple(found), bound2, l)


def unimodular_search(pool: CandidatePool, d: int, cap: int | None = None,
                      k: int | None = None, budget: int | None = None
                      ) -> Optional[tuple[intmat.Matrix, int]]:
    """Find ``k`` pool rows extendable to a unimodular basis, minimizing the largest width.

    ``k`` defaults to ``d`` (a full unimodular matrix).  Rows come back in
    ascending width order.  Returns None if no such rows exist among the
    directions of width below ``cap``.
    """
    k = d if k is None else k
    dirs = pool.directions if cap is None else pool.filtered(cap).directions
    examined = 0

    def extend(chosen, start_below):
        nonlocal examined
        if len(chosen) == k:
            return chosen
        for i in range(start_below):
            trial = chosen + (i,)
            examined += 1
            if budget is not None and examined > budget:
                raise BudgetExhausted(examined)
            if intmat.minors_gcd([dirs[j][0] for j in trial]) != 1:
                continue
            res = extend(trial, i)
            if res is not None:
                return res
        return None

    # The last chosen row is the widest; scanning it in ascending order makes
    # the first hit optimal.
    for top in range(len(dirs)):
        examined += 1
        if budget is not None and examined > budget:
            raise BudgetExhausted(examined)
        res = extend((top,), top) if k > 1 else (top,)
        if res is not None:
            rows = sorted(res, key=lambda j: (dirs[j][1], dirs[j][0]))
            return tuple(dirs[j][0] for j in rows), dirs[top][1]
    return None


def _flattened_successive(P: LatticePolytope, k: int, budget):
    """Handle lower-dimensional P; returns None when P is full-dimensional."""
    flat = reduce_dimension(P)
    if flat is None:
        return None
    codim = P.dim - flat.affine_dim
    if k <= codim:
        return 0, flat.map
    Q = flat.polytope
    if flat.affine_dim <= 1:
        return Q.coordinate_widths()[0], flat.map
    value, T = successive_size_bruteforce(Q, k - codim, budget)
    return value, compose(T.extended(P.dim), flat.map)


def successive_size_bruteforce(P: LatticePolytope, k: int, budget: int | None = None
                               ) -> tuple[int, AffineUnimodularMap]:
    """Smallest possible value of the k-th smallest image width over unimodular maps.

    ``k = 1`` gives the lattice width, ``k = d`` the lattice size and, in
    dimension 3, ``k = 2`` gives w2.  The returned map realizes the value in
    its first ``k`` image coordinates.
    """
    _check_dim(P)
    flat = _flattened_successive(P, k, budget)
    if flat is not None:
        return flat
    d = P.dim
    cw = P.coordinate_widths()
    order = sorted(range(d), key=lambda i: cw[i])
    T = AffineUnimodularMap.permutation(order)
    l = cw[order[k - 1]]
    ball = inscribed_ball(P)
    while True:
        pool = candidate_directions(P, l, ball).filtered(l)
        try:
            found = unimodular_search(pool, d, k=k, budget=budget)
        except BudgetExhausted as exc:
            exc.best = l
            raise
        if found is None:
            return l, T
        rows, achieved = found
        assert achieved < l
        T = AffineUnimodularMap(_complete_basis(rows, d))
        l = achieved


def _complete_basis(rows, d) -> intmat.Matrix:
    """Append unit-vector rows so that the matrix becomes unimodular."""
    given = list(rows)
    rows = list(given)
    for cand in intmat.identity(d):
        if len(rows) < d and intmat.minors_gcd(rows + [cand]) == 1:
            rows.append(cand)
    if len(rows) < d:
        # unit vectors do not always suffice; complete from the echelon transform
        _, u, _ = intmat.row_echelon(intmat.transpose(given))
        rows = given + list(intmat.transpose(intmat.unimodular_inverse(u))[len(given):])
    assert abs(intmat.det(rows)) == 1
    return intmat.as_matrix(rows)


def lattice_size_bruteforce(P: LatticePolytope, budget: int | None = None) -> SizeCertificate:
    """Lattice size by iterative tightening over the candidate pool."""
    value, T = successive_size_bruteforce(P, P.dim, budget)
    return certificate(P, T, value)


def width_bruteforce(P: LatticePolytope) -> int:
    """Lattice width by enumerating directions under a self-tightening norm bound."""
    _check_dim(P)
    if reduce_dimension(P) is not None:
        return 0
    ball = inscribed_ball(P)
    best = min(P.coordinate_widths())
    # every v with width < best satisfies 4 R^2 |v|^2 < best^2
    bound2 = Fraction(best * best) / (4 * ball.radius_squared)
    B = isqrt(bound2.numerator // bound2.denominator)
    for v in itertools.product(range(-B, B + 1), repeat=P.dim):
        n2 = sum(x * x for x in v)
        if n2 == 0 or 4 * ball.radius_squared * n2 >= best * best:
            continue
        if is_primitive(v):
            best = min(best, width(P, v))
    return best
