"""Admissible colorings, residues mod N and local-basis certificates for skein algebras."""
from .coloring import Coloring, Residue, add, is_admissible, lex_compare, lift_residue, residue
from .exactlinalg import IntMatrix, det_exact, det_mod, is_basis_mod, is_unit_mod
from .triangulation import Triangulation, euler_characteristic, folded_edges, validate

__all__ = [
    "Coloring",
    "IntMatrix",
    "Residue",
    "Triangulation",
    "add",
    "det_exact",
    "det_mod",
    "euler_characteristic",
    "folded_edges",
    "is_admissible",
    "is_basis_mod",
    "is_unit_mod",
    "lex_compare",
    "lift_residue",
    "residue",
    "validate",
]
