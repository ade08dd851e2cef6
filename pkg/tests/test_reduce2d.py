import random

import pytest

from cubesize.generic import lattice_size_bruteforce
from cubesize.lattice import AffineUnimodularMap, LatticePolytope, apply_map, e_box, width
from cubesize.reduce2d import (
    Reduction2DState,
    lattice_size_2d,
    minimal_rectangle_2d,
    reduce_2d,
    shear_step,
    width_2d,
)
from cubesize.sampling import random_unimodular

from conftest import polygons
from oracles import min_width_in_box, primitive_directions, width_of


def test_shear_step_triangle(triangle):
    s = Reduction2DState.start(triangle)
    assert (s.dx, s.dy, s.dmm) == (2, 3, 2)
    assert not s.terminal
    nxt = shear_step(s)
    assert nxt.e_box == 2
    assert apply_map(triangle, nxt.accumulated_map) == nxt.polygon


def test_shear_step_unit_square(unit_square):
    assert shear_step(Reduction2DState.start(unit_square)) is None


def test_shear_step_big_square():
    k = 5
    s = Reduction2DState.start(LatticePolytope([(0, 0), (k, k), (k, 0), (0, k)]))
    assert s.dpp == 10 and s.dmm == 10
    assert shear_step(s) is None


def test_shear_step_touch_case_keeps_e_box():
    # dx = dy = 4 with a short diagonal: only an e_box-preserving shear is possible
    P = LatticePolytope([(0, 0), (1, 0), (4, 3), (3, 4), (0, 1)])
    s = Reduction2DState.start(P)
    assert (s.dx, s.dy) == (4, 4) and s.dmm < 4
    nxt = shear_step(s)
    assert nxt.e_box == 4
    assert nxt.potential < s.potential


def test_lattice_size_2d_examples(triangle):
    cert = lattice_size_2d(triangle)
    assert cert.value == 2
    image = apply_map(triangle, cert.map)
    assert all(0 <= c <= 2 for p in image for c in p)
    assert lattice_size_2d(LatticePolytope([(4, 4)])).value == 0


def test_degenerate_segment():
    P = LatticePolytope([(1, 1), (4, 7)])
    cert = lattice_size_2d(P)
    assert cert.value == 3
    assert width_2d(P) == 0
    w, ls, T = minimal_rectangle_2d(P)
    assert (w, ls) == (0, 3)
    assert apply_map(P, T).coordinate_widths() == (0, 3)


def test_width_2d_examples(triangle, unit_square):
    assert width_2d(triangle) == 2
    assert min_width_in_box(triangle.points, 4) == 2
    assert width_2d(unit_square) == 1
    assert width_2d(LatticePolytope([(0, 0), (3, 0)])) == 0


def test_minimal_rectangle_examples(triangle, unit_square):
    w, ls, T = minimal_rectangle_2d(unit_square)
    assert (w, ls) == (1, 1)
    assert apply_map(unit_square, T) == unit_square
    w, ls, T = minimal_rectangle_2d(triangle)
    assert (w, ls) == (2, 2)
    assert apply_map(triangle, T).coordinate_widths() == (2, 2)


@pytest.mark.parametrize("P", polygons(40, seed=5), ids=lambda P: str(P.points))
def test_terminal_soundness(P):
    state, _ = reduce_2d(P)
    l = state.e_box
    axes = {(1, 0), (0, 1)}
    for v in primitive_directions(2, 3 * l):
        if v not in axes:
            assert width_of(state.polygon.points, v) >= l


def test_unimodular_invariance():
    rng = random.Random(17)
    for P in polygons(100, seed=17):
        T = random_unimodular(rng, 2, steps=5)
        assert lattice_size_2d(apply_map(P, T)).value == lattice_size_2d(P).value


def test_certificate_and_iterations():
    for P in polygons(200, seed=23):
        cert = lattice_size_2d(P)
        image = apply_map(P, cert.map)
        assert image.coordinate_widths() == cert.image_widths
        assert max(cert.image_widths) == cert.value
        assert all(0 <= c <= cert.value for p in image for c in p)
        assert cert.iterations <= 2 * e_box(P)
        assert all(a > b for a, b in zip(cert.trace, cert.trace[1:]))


def test_oracle_agreement_small():
    for P in polygons(60, seed=29):
        assert lattice_size_2d(P).value == lattice_size_bruteforce(P).value


def test_width_2d_matches_box_scan():
    for P in polygons(60, seed=31):
        assert width_2d(P) == min_width_in_box(P.points, 2 * e_box(P))


def test_minimal_rectangle_realizes_values():
    for P in polygons(100, seed=37):
        w, ls, T = minimal_rectangle_2d(P)
        assert w == width_2d(P) and ls == lattice_size_2d(P).value
        image = apply_map(P, T)
        assert image.coordinate_widths()[0] <= w and image.coordinate_widths()[1] <= ls
        assert min(p[0] for p in image) == 0 and min(p[1] for p in image) == 0


def test_requires_plane(unit_cube):
    with pytest.raises(ValueError):
        reduce_2d(unit_cube)


def test_big_translation_is_exact(triangle):
    # the shear loop is linear in e_box, so only the offset is huge here
    big = 10**30
    T = AffineUnimodularMap(((7, 5), (4, 3)), (big, -big))
    P = apply_map(triangle, T)
    cert = lattice_size_2d(P)
    assert cert.value == 2
    image = apply_map(P, cert.map)
    assert all(0 <= c <= 2 for p in image for c in p)
    assert width(P, (3, -5)) == width(triangle, (1, 0))
