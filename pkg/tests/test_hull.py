import random
from fractions import Fraction

import pytest

from cubesize.hull import DegenerateHullError, hull_2d, hull_3d, vertices
from cubesize.lattice import LatticePolytope, dot
from cubesize.sampling import random_polytope

from conftest import EXAMPLE1, UNIT_CUBE


def test_hull_2d_triangle():
    h = hull_2d([(0, 0), (1, 0), (2, 3), (1, 1)])
    assert sorted(h.vertices) == [(0, 0), (1, 0), (2, 3)]
    assert h.volume == Fraction(3, 2)
    assert h.centroid == (1, 1)
    assert len(h.facets) == 3


def test_hull_2d_drops_collinear():
    h = hull_2d([(0, 0), (1, 0), (2, 0), (2, 2), (0, 2), (1, 1)])
    assert sorted(h.vertices) == [(0, 0), (0, 2), (2, 0), (2, 2)]


def test_hull_2d_degenerate():
    with pytest.raises(DegenerateHullError):
        hull_2d([(0, 0), (1, 1), (3, 3)])


def test_hull_3d_cube_merges_coplanar_triangles():
    pts = [(x, y, z) for x in (0, 2) for y in (0, 2) for z in (0, 2)] + [(1, 1, 1), (1, 0, 1)]
    h = hull_3d(pts)
    assert len(h.facets) == 6
    assert len(h.vertices) == 8
    assert h.volume == 8
    assert h.centroid == (1, 1, 1)


def test_hull_3d_example1():
    h = hull_3d(EXAMPLE1)
    # (1,1,0) lies inside the bottom face
    assert (1, 1, 0) not in h.vertices
    assert len(h.vertices) == 6


def test_hull_3d_degenerate():
    with pytest.raises(DegenerateHullError):
        hull_3d([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])


def tet_volume6(a, b, c, d):
    u = [b[i] - a[i] for i in range(3)]
    v = [c[i] - a[i] for i in range(3)]
    w = [d[i] - a[i] for i in range(3)]
    return abs(u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0])
               + u[2] * (v[0] * w[1] - v[1] * w[0]))


@pytest.mark.parametrize("seed", range(5))
def test_hull_3d_random_consistency(seed):
    rng = random.Random(seed)
    for _ in range(40):
        P = random_polytope(rng, 3, 6, n_points=rng.randint(4, 12))
        h = hull_3d(P.points)
        for f in h.facets:
            vals = [dot(f.normal, p) for p in P.points]
            assert max(vals) == f.offset
            # every facet plane carries at least three affinely independent hull vertices
            assert sum(dot(f.normal, v) == f.offset for v in h.vertices) >= 3
        for v in h.vertices:
            assert v in P.points
        if len(P) == 4:
            assert h.volume * 6 == tet_volume6(*P.points)


def test_vertices_helper():
    assert len(vertices(LatticePolytope(UNIT_CUBE))) == 8
    # degenerate input falls back to the stored points
    assert vertices(LatticePolytope([(0, 0), (1, 1), (2, 2)])) == ((0, 0), (1, 1), (2, 2))
    assert vertices(LatticePolytope([(4, 4)])) == ((4, 4),)
