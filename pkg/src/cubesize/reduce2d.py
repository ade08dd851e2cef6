"""Lattice size, lattice width and minimal rectangle of lattice polygons.

The polygon is repeatedly sheared by one of four fixed unimodular matrices
until both diagonal widths ``Δ(x+y)`` and ``Δ(x-y)`` are at least the
larger coordinate width.  At that point no unimodular image fits in a
smaller square, and the smaller coordinate width is the lattice width.
No lattice points of the polygon are ever enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import (
    AffineUnimodularMap,
    LatticePolytope,
    SizeCertificate,
    apply_map,
    certificate,
    compose,
    reduce_dimension,
)

SHEARS = (
    ((1, 0), (1, 1)),
    ((1, 0), (1, -1)),
    ((0, 1), (1, 1)),
    ((0, 1), (1, -1)),
)


@dataclass(frozen=True)
class Reduction2DState:
    polygon: LatticePolytope
    accumulated_map: AffineUnimodularMap
    dx: int
    dy: int
    dpp: int
    dmm: int

    @classmethod
    def start(cls, polygon: LatticePolytope, T: AffineUnimodularMap | None = None):
        if T is None:
            T = AffineUnimodularMap.identity(2)
        xs = [p[0] for p in polygon.points]
        ys = [p[1] for p in polygon.points]
        s = [x + y for x, y in zip(xs, ys)]
        t = [x - y for x, y in zip(xs, ys)]
        return cls(polygon, T, max(xs) - min(xs), max(ys) - min(ys),
                   max(s) - min(s), max(t) - min(t))

    @property
    def e_box(self) -> int:
        return max(self.dx, self.dy)

    @property
    def potential(self) -> tuple[int, int]:
        return (self.e_box, self.dx + self.dy)

    @property
    def terminal(self) -> bool:
        return min(self.dpp, self.dmm) >= self.e_box


def _shear_widths(state: Reduction2DState, m) -> tuple[int, int]:
    # Image coordinate widths read off the four stored widths, no point pass.
    lookup = {(1, 0): state.dx, (0, 1): state.dy, (1, 1): state.dpp, (1, -1): state.dmm}
    return lookup[m[0]], lookup[m[1]]


def shear_step(state: Reduction2DState) -> Reduction2DState | None:
    """One reduction step, or None when the state is terminal.

    Among the four candidate shears the one with the smallest
    ``(e_box, sum of widths)`` of the image is chosen, ties going to the
    earlier matrix in ``SHEARS``.
    """
    if state.terminal:
        return None
    best = None
    for m in SHEARS:
        wa, wb = _shear_widths(state, m)
        key = (max(wa, wb), wa + wb)
        if best is None or key < best[0]:
            best = (key, m)
    A = AffineUnimodularMap(best[1])
    nxt = Reduction2DState.start(apply_map(state.polygon, A), compose(A, state.accumulated_map))
    assert nxt.potential < state.potential
    return nxt


def _degenerate_2d(P: LatticePolytope):
    """Certificate data for a point or segment: (ls, w, box map)."""
    flat = reduce_dimension(P)
    if flat is None:
        return None
    length = flat.polytope.coordinate_widths()[0] if flat.affine_dim else 0
    # the flattening puts the segment on the first axis; swap so width 0 comes first
    T = compose(AffineUnimodularMap.permutation((1, 0)), flat.map)
    return length, 0, T


def reduce_2d(P: LatticePolytope) -> tuple[Reduction2DState, list]:
    """Run shear steps to the terminal state; also return the potentials seen."""
    if P.dim != 2:
        raise ValueError("reduce_2d needs a polygon in the plane")
    state = Reduction2DState.start(P)
    trace = [state.potential]
    while (nxt := shear_step(state)) is not None:
        state = nxt
        trace.append(state.potential)
    return state, trace


def lattice_size_2d(P: LatticePolytope) -> SizeCertificate:
    """Lattice size of a polygon with respect to the unit square."""
    degenerate = _degenerate_2d(P)
    if degenerate is not None:
        ls, _, T = degenerate
        return certificate(P, T, ls)
    state, trace = reduce_2d(P)
    return certificate(P, state.accumulated_map, state.e_box, len(trace) - 1, tuple(trace))


def width_2d(P: LatticePolytope) -> int:
    degenerate = _degenerate_2d(P)
    if degenerate is not None:
        return 0
    state, _ = reduce_2d(P)
    return min(state.dx, state.dy)


def minimal_rectangle_2d(P: LatticePolytope) -> tuple[int, int, AffineUnimodularMap]:
    """Smallest rectangle ``[0,w] x [0,ls]`` holding a unimodular copy of P.

    Returns ``(w, ls, map)``; the pair is the product-order minimum of all
    achievable rectangles.
    """
    degenerate = _degenerate_2d(P)
    if degenerate is not None:
        ls, w, T = degenerate
        return w, ls, certificate(P, T).map
    state, _ = reduce_2d(P)
    T = state.accumulated_map
    if state.dx > state.dy:
        T = compose(AffineUnimodularMap.permutation((1, 0)), T)
    return min(state.dx, state.dy), state.e_box, certificate(P, T).map
