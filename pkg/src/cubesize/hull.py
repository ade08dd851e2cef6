"""Exact convex hulls of integer point sets in the plane and in space.

Both hulls use only integer orientation predicates.  A hull is reported as
a list of facet inequalities ``n . x <= c`` with primitive integer normals
plus the vertex list, which is what the inscribed-ball bound needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lattice import LatticePolytope, Vector, content, dot


class DegenerateHullError(ValueError):
    """The points do not span the ambient space."""


@dataclass(frozen=True)
class Facet:
    normal: Vector
    offset: int

    def slack(self, x) -> Fraction:
        """``offset - normal . x``; nonnegative exactly on the inner side."""
        return self.offset - sum(Fraction(a) * b for a, b in zip(self.normal, x))


@dataclass(frozen=True)
class Hull:
    vertices: tuple[Vector, ...]
    facets: tuple[Facet, ...]
    volume: Fraction
    centroid: tuple[Fraction, ...]


def _facet(normal: Sequence[int], point: Sequence[int]) -> Facet:
    g = content(normal)
    n = tuple(x // g for x in normal)
    return Facet(n, dot(n, point))


def cross2(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull_2d(points: Sequence[Vector]) -> Hull:
    """Monotone chain hull; vertices counter-clockwise, collinear points dropped."""
    pts = sorted(set(map(tuple, points)))
    if len(pts) < 3:
        raise DegenerateHullError("fewer than three distinct points")

    def half(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and cross2(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower, upper = half(pts), half(reversed(pts))
    verts = lower[:-1] + upper[:-1]
    if len(verts) < 3:
        raise DegenerateHullError("points are collinear")

    facets = []
    area2 = 0
    cx = cy = 0
    for i, a in enumerate(verts):
        b = verts[(i + 1) % len(verts)]
        # outward normal of a counter-clockwise edge a->b
        facets.append(_facet((b[1] - a[1], a[0] - b[0]), a))
        c = a[0] * b[1] - a[1] * b[0]
        area2 += c
        cx += (a[0] + b[0]) * c
        cy += (a[1] + b[1]) * c
    centroid = (Fraction(cx, 3 * area2), Fraction(cy, 3 * area2))
    return Hull(tuple(verts), tuple(facets), Fraction(area2, 2), centroid)


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def orient3(a, b, c, p) -> int:
    """Positive when p lies on the side of plane abc that (b-a)x(c-a) points to."""
    return dot(_cross(_sub(b, a), _sub(c, a)), _sub(p, a))


def _initial_tetrahedron(pts):
    a = pts[0]
    b = next((p for p in pts if p != a), None)
    if b is None:
        raise DegenerateHullError("all points coincide")
    c = next((p for p in pts if any(_cross(_sub(b, a), _sub(p, a)))), None)
    if c is None:
        raise DegenerateHullError("points are collinear")
    d = next((p for p in pts if orient3(a, b, c, p) != 0), None)
    if d is None:
        raise DegenerateHullError("points are coplanar")
    return a, b, c, d


def hull_3d(points: Sequence[Vector]) -> Hull:
    """Incremental hull with exact orientation tests.

    The boundary is kept as outward-oriented triangles.  Points on the plane
    of a face are not treated as visible from it, so coplanar triangles can
    appear; facets are merged by plane afterwards.
    """
    pts = sorted(set(map(tuple, points)))
    a, b, c, d = _initial_tetrahedron(pts)
    if orient3(a, b, c, d) > 0:
        b, c = c, b
    faces = {(a, b, c), (a, d, b), (b, d, c), (c, d, a)}
    for p in pts:
        visible = [f for f in faces if orient3(*f, p) > 0]
        if not visible:
            continue
        edges = set()
        for f in visible:
            for e in ((f[0], f[1]), (f[1], f[2]), (f[2], f[0])):
                edges.add(e)
        faces.difference_update(visible)
        for u, v in edges:
            if (v, u) not in edges:
                faces.add((u, v, p))

    planes = {}
    for f in faces:
        fac = _facet(_cross(_sub(f[1], f[0]), _sub(f[2], f[0])), f[0])
        planes.setdefault(fac.normal, fac)
    facets = tuple(sorted(planes.values(), key=lambda f: f.normal))

    # a boundary point is a vertex when the normals of its facets span space
    on_boundary = {q for f in faces for q in f}
    verts = []
    for q in sorted(on_boundary):
        normals = [f.normal for f in facets if dot(f.normal, q) == f.offset]
        if _spans_space(normals):
            verts.append(q)

    # centroid by coning the triangles from an interior reference point
    ref = tuple(Fraction(sum(x), 4) for x in zip(a, b, c, d))
    vol6 = Fraction(0)
    acc = [Fraction(0)] * 3
    for f in faces:
        v6 = -orient3(*[tuple(Fraction(x) for x in q) for q in f], ref)
        vol6 += v6
        for i in range(3):
            acc[i] += v6 * (f[0][i] + f[1][i] + f[2][i] + ref[i])
    centroid = tuple(x / (4 * vol6) for x in acc)
    return Hull(tuple(verts), facets, vol6 / 6, centroid)


def _spans_space(normals) -> bool:
    for i in range(len(normals)):
        for j in range(i + 1, len(normals)):
            cr = _cross(normals[i], normals[j])
            if any(cr) and any(dot(cr, n) for n in normals):
                return True
    return False


def convex_hull(P: LatticePolytope) -> Hull:
    if P.dim == 2:
        return hull_2d(P.points)
    if P.dim == 3:
        return hull_3d(P.points)
    raise NotImplementedError(f"no exact hull backend for dimension {P.dim}")


def vertices(P: LatticePolytope) -> tuple[Vector, ...]:
    """Vertices of P, falling back to the stored points for degenerate input."""
    try:
        return tuple(sorted(convex_hull(P).vertices))
    except (DegenerateHullError, NotImplementedError):
        if P.dim == 1 or len(P) <= 2:
            return (P.points[0], P.points[-1]) if len(P) > 1 else P.points
        return P.points
