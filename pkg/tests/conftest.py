import random

import pytest

from cubesize.lattice import LatticePolytope
from cubesize.sampling import random_polytope

TRIANGLE = [(0, 0), (1, 0), (2, 3)]
EXAMPLE1 = [(1, 0, 0), (1, 1, 0), (0, 4, 0), (2, 4, 0), (0, 1, 1), (0, 4, 1), (0, 1, 10)]
EXAMPLE2 = [(0, 3, 1), (5, 2, 3), (4, 0, 4), (2, 5, 4), (1, 3, 0), (3, 4, 5)]
EXAMPLE2_IMAGE = [(0, 1, 2), (4, 4, 4), (1, 2, 0), (4, 0, 3), (1, 3, 4), (4, 0, 2)]
UNIT_SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]
UNIT_CUBE = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]

# thin in direction (-1,-1,2) at the terminal state, below l1
FLAT_112 = [(0, 0, 0), (4, 4, 4), (4, 0, 2), (0, 4, 2), (1, 0, 0)]
# terminal widths (3,5,5) with exceptional width 4 strictly between l1 and l2
MIDDLE_E = [(0, 1, 2), (0, 2, 1), (0, 6, 3), (0, 6, 5), (2, 1, 2), (2, 1, 3), (2, 4, 4),
            (2, 6, 4), (3, 1, 4), (3, 6, 6)]


@pytest.fixture
def triangle():
    return LatticePolytope(TRIANGLE)


@pytest.fixture
def example1():
    return LatticePolytope(EXAMPLE1)


@pytest.fixture
def example2():
    return LatticePolytope(EXAMPLE2)


@pytest.fixture
def unit_square():
    return LatticePolytope(UNIT_SQUARE)


@pytest.fixture
def unit_cube():
    return LatticePolytope(UNIT_CUBE)


def polygons(count, coord_max=6, seed=2024):
    rng = random.Random(seed)
    return [random_polytope(rng, 2, coord_max) for _ in range(count)]


def polytopes3(count, coord_max=4, seed=3034):
    rng = random.Random(seed)
    return [random_polytope(rng, 3, coord_max) for _ in range(count)]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
