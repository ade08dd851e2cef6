import random

from hypothesis import given, settings
from hypothesis import strategies as st

from cubesize import lattice_size
from cubesize.hull import vertices
from cubesize.lattice import (
    AffineUnimodularMap,
    LatticePolytope,
    apply_map,
    e_box,
    invert,
    width,
)
from cubesize.intmat import transpose
from cubesize.reduce2d import width_2d
from cubesize.reduce3d import w2_3d, width_3d
from cubesize.sampling import random_unimodular

coord = st.integers(-6, 6)


def point_sets(dim):
    return st.lists(st.tuples(*[coord] * dim), min_size=1, max_size=2 * dim + 2)


polytope2 = point_sets(2).map(LatticePolytope)
polytope3 = point_sets(3).map(LatticePolytope)
direction = st.integers(-5, 5)


def maps(dim):
    return st.builds(lambda seed: random_unimodular(random.Random(seed), dim),
                     st.integers(0, 2**32))


@given(polytope3, st.tuples(direction, direction, direction), st.tuples(direction, direction, direction))
def test_width_subadditive(P, f, g):
    s = tuple(a + b for a, b in zip(f, g))
    assert width(P, s) <= width(P, f) + width(P, g)


@given(polytope3, st.tuples(direction, direction, direction), st.integers(-4, 4))
def test_width_homogeneous(P, f, c):
    assert width(P, tuple(c * x for x in f)) == abs(c) * width(P, f)


@given(polytope3, maps(3))
def test_pullback_identity(P, T):
    image = apply_map(P, T)
    At = transpose(T.matrix)
    for i, e in enumerate(((1, 0, 0), (0, 1, 0), (0, 0, 1))):
        pulled = tuple(sum(At[r][c] * e[c] for c in range(3)) for r in range(3))
        assert image.coordinate_widths()[i] == width(P, pulled)


@settings(max_examples=150)
@given(polytope2, maps(2), st.tuples(coord, coord))
def test_ls_invariance_2d(P, T, shift):
    moved = apply_map(P, AffineUnimodularMap(T.matrix, shift))
    assert lattice_size(moved).value == lattice_size(P).value
    assert width_2d(moved) == width_2d(P)


@settings(max_examples=100, deadline=None)
@given(polytope3, maps(3))
def test_ls_invariance_3d(P, T):
    moved = apply_map(P, T)
    assert lattice_size(moved).value == lattice_size(P).value
    assert width_3d(moved) == width_3d(P)
    assert w2_3d(moved) == w2_3d(P)


@settings(deadline=None)
@given(polytope3)
def test_sandwich(P):
    assert width_3d(P) <= w2_3d(P) <= lattice_size(P).value <= e_box(P)


@settings(deadline=None)
@given(polytope3, st.tuples(coord, coord, coord))
def test_monotone_under_inclusion(P, extra):
    bigger = LatticePolytope(P.points + (extra,))
    assert lattice_size(P).value <= lattice_size(bigger).value
    assert width_3d(P) <= width_3d(bigger)


@settings(deadline=None)
@given(polytope3)
def test_only_vertices_matter(P):
    hull = LatticePolytope(vertices(P))
    assert lattice_size(hull).value == lattice_size(P).value


@given(polytope3, maps(3))
def test_map_round_trip(P, T):
    assert apply_map(apply_map(P, T), invert(T)) == P
