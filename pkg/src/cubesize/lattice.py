"""Lattice polytopes, widths and affine unimodular maps.

A polytope is kept as the finite point set whose convex hull it is.  Every
invariant computed in this package only needs widths ``max f - min f`` of
integer linear functionals over those points, so no facet description is
stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Iterable, NamedTuple, Optional, Sequence

from . import intmat
from .intmat import Matrix

Vector = tuple[int, ...]


class DimensionError(ValueError):
    """Raised when objects of different ambient dimension are combined."""


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def content(v: Iterable[int]) -> int:
    return reduce(gcd, (abs(x) for x in v), 0)


def is_primitive(v: Sequence[int]) -> bool:
    return content(v) == 1


def canonical_sign(v: Sequence[int]) -> Vector:
    """Flip ``v`` so that its first nonzero coordinate is positive."""
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of a nonempty finite set of integer points.

    Duplicate points are dropped and the rest are kept sorted, so two
    polytopes built from the same point set compare equal.
    """

    points: tuple[Vector, ...]

    def __post_init__(self):
        pts = sorted({tuple(int(x) for x in p) for p in self.points})
        if not pts:
            raise ValueError("a lattice polytope needs at least one point")
        d = len(pts[0])
        if d < 1:
            raise DimensionError("points must have at least one coordinate")
        if any(len(p) != d for p in pts):
            raise DimensionError("all points must have the same dimension")
        object.__setattr__(self, "points", tuple(pts))

    @property
    def dim(self) -> int:
        return len(self.points[0])

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def values(self, f: Sequence[int]) -> list[int]:
        return [dot(f, p) for p in self.points]

    def width(self, f: Sequence[int]) -> int:
        return width(self, f)

    def coordinate_widths(self) -> tuple[int, ...]:
        return tuple(max(c) - min(c) for c in zip(*self.points))

    def translate(self, v: Sequence[int]) -> "LatticePolytope":
        return LatticePolytope([tuple(x + y for x, y in zip(p, v)) for p in self.points])

    def project(self, k: int) -> "LatticePolytope":
        """Keep only the first ``k`` coordinates."""
        return LatticePolytope([p[:k] for p in self.points])


def width(P: LatticePolytope, f: Sequence[int]) -> int:
    """Width ``max f(x) - min f(x)`` of the integer functional ``f`` over P.

    ``f`` need not be primitive.
    """
    if len(f) != P.dim:
        raise DimensionError(f"functional of length {len(f)} on a {P.dim}-dimensional polytope")
    vals = P.values(f)
    return max(vals) - min(vals)


def e_box(P: LatticePolytope) -> int:
    """Largest coordinate width: the cube a translate of P fits in."""
    return max(P.coordinate_widths())


@dataclass(frozen=True)
class AffineUnimodularMap:
    """The map ``x -> A x + v`` with integer ``A``, ``|det A| = 1``, integer ``v``."""

    matrix: Matrix
    translation: Vector = field(default=())

    def __post_init__(self):
        a = intmat.as_matrix(self.matrix)
        d = len(a)
        if d == 0 or any(len(row) != d for row in a):
            raise DimensionError("matrix must be square and nonempty")
        if intmat.det(a) not in (1, -1):
            raise ValueError(f"matrix {a} is not unimodular")
        v = tuple(int(x) for x in self.translation) or (0,) * d
        if len(v) != d:
            raise DimensionError("translation length does not match the matrix")
        object.__setattr__(self, "matrix", a)
        object.__setattr__(self, "translation", v)

    @classmethod
    def identity(cls, d: int) -> "AffineUnimodularMap":
        return cls(intmat.identity(d))

    @classmethod
    def permutation(cls, order: Sequence[int]) -> "AffineUnimodularMap":
        """Map whose i-th output coordinate is input coordinate ``order[i]``."""
        d = len(order)
        return cls(tuple(tuple(int(j == order[i]) for j in range(d)) for i in range(d)))

    @classmethod
    def shift(cls, v: Sequence[int]) -> "AffineUnimodularMap":
        return cls(intmat.identity(len(v)), tuple(v))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def det(self) -> int:
        return intmat.det(self.matrix)

    def __call__(self, x: Sequence[int]) -> Vector:
        return tuple(a + b for a, b in zip(intmat.matvec(self.matrix, x), self.translation))

    def __matmul__(self, other: "AffineUnimodularMap") -> "AffineUnimodularMap":
        return compose(self, other)

    def inverse(self) -> "AffineUnimodularMap":
        return invert(self)

    def extended(self, d: int) -> "AffineUnimodularMap":
        """Act on the first coordinates as ``self`` and fix the remaining ones."""
        k = self.dim
        if d < k:
            raise DimensionError("cannot extend to a smaller dimension")
        rows = [tuple(self.matrix[i]) + (0,) * (d - k) for i in range(k)]
        rows += [tuple(int(j == i) for j in range(d)) for i in range(k, d)]
        return AffineUnimodularMap(tuple(rows), self.translation + (0,) * (d - k))


def compose(T1: AffineUnimodularMap, T2: AffineUnimodularMap) -> AffineUnimodularMap:
    """The map ``T1 o T2`` (apply T2 first)."""
    if T1.dim != T2.dim:
        raise DimensionError("cannot compose maps of different dimension")
    a = intmat.matmul(T1.matrix, T2.matrix)
    v = tuple(x + y for x, y in zip(intmat.matvec(T1.matrix, T2.translation), T1.translation))
    return AffineUnimodularMap(a, v)


def invert(T: AffineUnimodularMap) -> AffineUnimodularMap:
    inv = intmat.unimodular_inverse(T.matrix)
    return AffineUnimodularMap(inv, tuple(-x for x in intmat.matvec(inv, T.translation)))


def apply_map(P: LatticePolytope, T: AffineUnimodularMap) -> LatticePolytope:
    if P.dim != T.dim:
        raise DimensionError(f"{T.dim}-dimensional map on a {P.dim}-dimensional polytope")
    return LatticePolytope([T(p) for p in P.points])


def normalize_translation(P: LatticePolytope) -> tuple[LatticePolytope, Vector]:
    """Shift P so every coordinate minimum is 0; also return the shift used."""
    shift = tuple(-min(c) for c in zip(*P.points))
    return P.translate(shift), shift


def normalizing_map(P: LatticePolytope, T: AffineUnimodularMap) -> AffineUnimodularMap:
    """``T`` followed by the translation that puts ``T(P)`` at the origin."""
    _, shift = normalize_translation(apply_map(P, T))
    return compose(AffineUnimodularMap.shift(shift), T)


@dataclass(frozen=True)
class WidthProfile:
    widths: tuple[int, ...]
    perm: AffineUnimodularMap

    @property
    def order(self) -> tuple[int, ...]:
        return tuple(row.index(1) for row in self.perm.matrix)


def width_profile(P: LatticePolytope) -> WidthProfile:
    """Coordinate widths in ascending order, with the permutation realizing it.

    Equal widths keep their original coordinate order.
    """
    w = P.coordinate_widths()
    order = sorted(range(P.dim), key=lambda i: w[i])
    return WidthProfile(tuple(w[i] for i in order), AffineUnimodularMap.permutation(order))


@dataclass(frozen=True)
class SizeCertificate:
    """An invariant value together with a map realizing it.

    ``map`` sends P into ``[0, value]^d``; ``image_widths`` are the
    coordinate widths of the image.  ``trace`` holds the potential recorded
    before each reduction step and at the end.
    """

    value: int
    map: AffineUnimodularMap
    image_widths: tuple[int, ...]
    iterations: int = 0
    trace: tuple = ()


def certificate(P: LatticePolytope, T: AffineUnimodularMap, value: int | None = None,
                iterations: int = 0, trace: tuple = ()) -> SizeCertificate:
    """Build a certificate from an arbitrary map, normalizing its translation."""
    T = normalizing_map(P, T)
    widths = apply_map(P, T).coordinate_widths()
    if value is None:
        value = max(widths)
    return SizeCertificate(value, T, widths, iterations, trace)


class Flattening(NamedTuple):
    """A lower-dimensional polytope lattice-equivalent to the input.

    ``map`` sends the input into the span of the first ``affine_dim`` axes
    (all later coordinates 0); ``polytope`` is that image restricted to the
    first ``max(affine_dim, 1)`` coordinates.
    """

    polytope: LatticePolytope
    map: AffineUnimodularMap
    affine_dim: int


def affine_dimension(P: LatticePolytope) -> int:
    p0 = P.points[0]
    edges = [[x - y for x, y in zip(p, p0)] for p in P.points[1:]]
    if not edges:
        return 0
    return intmat.row_echelon(intmat.transpose(edges))[2]


def reduce_dimension(P: LatticePolytope) -> Optional[Flattening]:
    """Flatten a lower-dimensional P into a coordinate subspace.

    Returns None when P is full-dimensional.
    """
    d = P.dim
    p0 = P.points[0]
    edges = [[x - y for x, y in zip(p, p0)] for p in P.points[1:]]
    if not edges:
        T = AffineUnimodularMap.shift(tuple(-x for x in p0))
        return Flattening(LatticePolytope([(0,)]), T, 0)
    _, u, rank = intmat.row_echelon(intmat.transpose(edges))
    if rank == d:
        return None
    T = normalizing_map(P, AffineUnimodularMap(u))
    Q = apply_map(P, T)
    return Flattening(Q.project(max(rank, 1)), T, rank)
