"""Lattice size of lattice polygons and 3D lattice polytopes with respect to the unit cube."""

from .generic import (
    BudgetExhausted,
    UnsupportedDimensionError,
    lattice_size_bruteforce,
    successive_size_bruteforce,
    width_bruteforce,
)
from .lattice import (
    AffineUnimodularMap,
    LatticePolytope,
    SizeCertificate,
    apply_map,
    compose,
    e_box,
    invert,
    normalize_translation,
    reduce_dimension,
    width,
    width_profile,
)
from .reduce2d import lattice_size_2d, minimal_rectangle_2d, width_2d
from .reduce3d import lattice_size_3d, minimal_box_3d, w2_3d, width_3d

__all__ = [
    "AffineUnimodularMap", "BudgetExhausted", "LatticePolytope", "SizeCertificate",
    "UnsupportedDimensionError", "apply_map", "compose", "e_box", "invert",
    "lattice_size", "lattice_size_2d", "lattice_size_3d", "lattice_size_bruteforce",
    "minimal_box_3d", "minimal_rectangle_2d", "normalize_translation", "reduce_dimension",
    "successive_size_bruteforce", "w2_3d", "width", "width_2d", "width_3d",
    "width_bruteforce", "width_profile",
]


def lattice_size(P: LatticePolytope) -> SizeCertificate:
    """Dispatch to the planar or spatial algorithm."""
    if P.dim == 2:
        return lattice_size_2d(P)
    if P.dim == 3:
        return lattice_size_3d(P)
    raise UnsupportedDimensionError(f"dimension {P.dim} is not supported (need 2 or 3)")
