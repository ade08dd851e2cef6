"""Lattice size, width, w2 and minimal box of 3D lattice polytopes.

Coordinates are kept sorted so that ``Δ(x) = l1 <= Δ(y) = l2 <= Δ(z) = l``.
The (x, y) projection is first reduced with the planar shear loop, which
gives ``Δ(x ± y) >= l2``.  Then only the finitely many directions
``(a, b, 1)`` with ``(a, b)`` in the set S built from ``(l1, l2, l)`` can
have width below ``l``; if none does, ``l`` is the lattice size.  Otherwise
``z`` is replaced by the thinnest such direction and the loop repeats.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import (
    AffineUnimodularMap,
    LatticePolytope,
    SizeCertificate,
    apply_map,
    certificate,
    compose,
    reduce_dimension,
    width_profile,
)
from .reduce2d import Reduction2DState, lattice_size_2d, minimal_rectangle_2d, shear_step, width_2d

# one representative per ± pair
E_DIRECTIONS = ((1, 1, 2), (1, -1, 2), (-1, 1, 2), (-1, -1, 2))


@dataclass(frozen=True)
class DirectionSet:
    pairs: tuple[tuple[int, int], ...]
    bounds_used: tuple[int, int, int]

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __contains__(self, ab):
        return tuple(ab) in set(self.pairs)


def in_S(a: int, b: int, l1: int, l2: int, l: int) -> bool:
    """Membership in S, as cross-multiplied integer inequalities."""
    A, B = abs(a), abs(b)
    if A >= B and not (B * l2 <= 2 * l - 1 and A * l1 <= 2 * l - 1 + B * l2):
        return False
    if B >= A and not (A * l1 <= 2 * l - 1 and B * l2 <= 2 * l - 1 + A * l1):
        return False
    return True


def build_S(l1: int, l2: int, l: int) -> DirectionSet:
    """All integer pairs (a, b) for which ``Δ(ax + by + z) < l`` is not ruled out.

    Needs ``1 <= l1 <= l2 <= l``; the pairs are returned in lexicographic
    order.
    """
    if not 1 <= l1 <= l2 <= l:
        raise ValueError(f"need 1 <= l1 <= l2 <= l, got {(l1, l2, l)}")
    amax = (4 * l - 2) // l1
    bmax = (4 * l - 2) // l2
    pairs = tuple((a, b) for a in range(-amax, amax + 1) for b in range(-bmax, bmax + 1)
                  if in_S(a, b, l1, l2, l))
    return DirectionSet(pairs, (l1, l2, l))


@dataclass(frozen=True)
class Reduction3DState:
    polytope: LatticePolytope
    accumulated_map: AffineUnimodularMap
    widths: tuple[int, int, int]

    @classmethod
    def start(cls, P: LatticePolytope, T: AffineUnimodularMap | None = None):
        return cls(P, T or AffineUnimodularMap.identity(3), P.coordinate_widths())

    @property
    def potential(self) -> int:
        return sum(self.widths)

    def mapped(self, A: AffineUnimodularMap) -> "Reduction3DState":
        Q = apply_map(self.polytope, A)
        return Reduction3DState(Q, compose(A, self.accumulated_map), Q.coordinate_widths())


def sort_coordinates(state: Reduction3DState) -> Reduction3DState:
    prof = width_profile(state.polytope)
    if prof.order == (0, 1, 2):
        return state
    return state.mapped(prof.perm)


def normalize_projection(state: Reduction3DState, trace: list | None = None) -> Reduction3DState:
    """Run the planar shear loop on the (x, y) coordinates, leaving z alone.

    Expects sorted coordinates and returns them sorted again.  The potential
    ``l1 + l2 + l`` after every shear is appended to ``trace``.
    """
    proj = LatticePolytope([p[:2] for p in state.polytope.points])
    s2 = Reduction2DState.start(proj)
    l = state.widths[2]
    while (nxt := shear_step(s2)) is not None:
        s2 = nxt
        if trace is not None:
            trace.append(s2.dx + s2.dy + l)
    if s2.accumulated_map.matrix != ((1, 0), (0, 1)):
        state = state.mapped(AffineUnimodularMap(s2.accumulated_map.matrix).extended(3))
    if state.widths[0] > state.widths[1]:
        state = state.mapped(AffineUnimodularMap.permutation((1, 0, 2)))
    return state


def scan_S(P3: LatticePolytope, S: DirectionSet) -> tuple[tuple[int, int], int]:
    """Pair (m, n) in S minimizing ``Δ(mx + ny + z)``, and that width.

    Ties go to the lexicographically smallest pair.
    """
    pts = P3.points
    best = None
    for m, n in S.pairs:
        vals = [m * x + n * y + z for x, y, z in pts]
        w = max(vals) - min(vals)
        if best is None or w < best[1]:
            best = ((m, n), w)
    return best


@dataclass
class Reduction3DResult:
    """Terminal state of the 3D loop plus bookkeeping for reports."""

    state: Reduction3DState
    value: int
    trace: list = field(default_factory=list)
    s_sizes: list = field(default_factory=list)

    @property
    def iterations(self) -> int:
        return len(self.trace) - 1


def reduce_3d(P: LatticePolytope, naive: bool = False) -> Reduction3DResult:
    """Main 3D loop on a full-dimensional polytope.

    With ``naive=False`` the loop stops as soon as the thinnest direction in
    S is at least ``l2`` wide, since that width is then the lattice size.
    ``naive=True`` keeps shearing until no direction in S is thinner than
    ``l``; both give the same value.
    """
    if P.dim != 3:
        raise ValueError("reduce_3d needs a polytope in 3-space")
    state = Reduction3DState.start(P)
    trace = [state.potential]
    s_sizes = []
    while True:
        state = normalize_projection(sort_coordinates(state), trace)
        l1, l2, l = state.widths
        S = build_S(l1, l2, l)
        s_sizes.append(len(S))
        (m, n), lp = scan_S(state.polytope, S)
        if lp >= l:
            return Reduction3DResult(state, l, trace, s_sizes)
        state = state.mapped(AffineUnimodularMap(((1, 0, 0), (0, 1, 0), (m, n, 1))))
        trace.append(state.potential)
        if not naive and lp >= l2:
            return Reduction3DResult(state, lp, trace, s_sizes)


def _exceptional_minimum(Q: LatticePolytope) -> tuple[int, tuple[int, int, int]]:
    return min((Q.width(e), e) for e in E_DIRECTIONS)


@dataclass(frozen=True)
class Box3D:
    w: int
    w2: int
    ls: int
    map: AffineUnimodularMap


def _degenerate_box(P: LatticePolytope):
    flat = reduce_dimension(P)
    if flat is None:
        return None
    if flat.affine_dim <= 1:
        ls = flat.polytope.coordinate_widths()[0]
        T = compose(AffineUnimodularMap.permutation((1, 2, 0)), flat.map)
        return Box3D(0, 0, ls, certificate(P, T).map)
    w, ls, T2 = minimal_rectangle_2d(flat.polytope)
    T = AffineUnimodularMap(T2.matrix).extended(3)
    T = compose(AffineUnimodularMap.permutation((2, 0, 1)), compose(T, flat.map))
    return Box3D(0, w, ls, certificate(P, T).map)


def _terminal(P: LatticePolytope, naive: bool = False) -> tuple[Reduction3DResult, Reduction3DState]:
    res = reduce_3d(P, naive)
    # re-establish sorted widths and Δ(x ± y) >= l2 before reading off w and w2
    return res, normalize_projection(sort_coordinates(res.state))


def lattice_size_3d(P: LatticePolytope, naive: bool = False) -> SizeCertificate:
    """Lattice size of a 3D polytope with respect to the unit cube."""
    flat = reduce_dimension(P)
    if flat is not None:
        if flat.affine_dim <= 1:
            return certificate(P, flat.map)
        c2 = lattice_size_2d(flat.polytope)
        T = compose(AffineUnimodularMap(c2.map.matrix).extended(3), flat.map)
        return certificate(P, T, c2.value, c2.iterations, c2.trace)
    res = reduce_3d(P, naive)
    return certificate(P, res.state.accumulated_map, res.value, res.iterations, tuple(res.trace))


def width_3d(P: LatticePolytope) -> int:
    flat = reduce_dimension(P)
    if flat is not None:
        return 0
    _, st = _terminal(P)
    return min(st.widths[0], _exceptional_minimum(st.polytope)[0])


def w2_3d(P: LatticePolytope) -> int:
    """Smallest k with a unimodular copy of P inside ``[0,k] x [0,k] x R``."""
    flat = reduce_dimension(P)
    if flat is not None:
        return 0 if flat.affine_dim <= 1 else width_2d(flat.polytope)
    _, st = _terminal(P)
    l1, l2, _ = st.widths
    m = _exceptional_minimum(st.polytope)[0]
    return min(l2, max(l1, m))


def minimal_box_3d(P: LatticePolytope) -> Box3D:
    """The product-order minimal box ``[0,w] x [0,w2] x [0,ls]`` and a map into it."""
    degenerate = _degenerate_box(P)
    if degenerate is not None:
        return degenerate
    _, st = _terminal(P)
    l1, l2, l = st.widths
    m, (a, b, c) = _exceptional_minimum(st.polytope)
    T = st.accumulated_map
    if m < l1:
        T = compose(AffineUnimodularMap(((a, b, c), (1, 0, 0), (0, 0, 1))), T)
    elif m < l2:
        T = compose(AffineUnimodularMap(((1, 0, 0), (a, b, c), (0, 0, 1))), T)
    return Box3D(min(l1, m), min(l2, max(l1, m)), l, certificate(P, T).map)
