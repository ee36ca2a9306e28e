"""Local-basis certificates from residue determinants.

A family of |E| simple diagrams gives a local basis of threaded products
(levels 0..N-1) when the residues of its colorings form a basis of (Z/N)^E.
The determinant is computed once over Z and then tested for being a unit
mod each N.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .coloring import Coloring, ContextMismatch
from .exactlinalg import IntMatrix, det_exact, is_unit_mod


class Verdict(str, Enum):
    LOCAL_BASIS = "LocalBasis"
    NOT_BASIS = "NotBasis"


class NotABasis(ValueError):
    pass


def _check_odd(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"modulus must be odd and positive, got {n}")


@dataclass(frozen=True)
class BasisCertificate:
    N: int
    matrix: IntMatrix
    det: int
    unit: bool
    verdict: Verdict
    num_edges: int
    boundary: tuple[int, ...] = ()
    punctures: int | None = None
    ranks: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "matrix": self.matrix.tolist(),
            "det": str(self.det),
            "unit": self.unit,
            "verdict": self.verdict.value,
            "boundary": list(self.boundary),
            "ranks": self.ranks,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _rank(n: int, exponent: int) -> dict:
    return {"exponent": exponent, "value": str(n**exponent)}


def residue_matrix(family: Sequence[Coloring], n: int) -> IntMatrix:
    """Rows are the colorings themselves; reduction mod ``n`` happens in the unit test."""
    _check_odd(n)
    if not family:
        raise ValueError("empty family")
    t = family[0].triangulation
    for c in family:
        if c.triangulation != t:
            raise ContextMismatch("family spans several triangulations")
    if len(family) != t.num_edges:
        raise ValueError(f"family has {len(family)} curves, triangulation has {t.num_edges} edges")
    return IntMatrix(tuple(c.values for c in family))


def certify_local_basis(family: Sequence[Coloring], n: int, punctures: int | None = None) -> BasisCertificate:
    m = residue_matrix(family, n)
    det = det_exact(m)
    unit = is_unit_mod(det, n)
    size = m.nrows
    ranks = {"overCharacters": _rank(n, size)}
    if punctures is not None:
        ranks["overCenter"] = _rank(n, size - punctures)
    verdict = Verdict.LOCAL_BASIS if unit and m.is_square else Verdict.NOT_BASIS
    return BasisCertificate(n, m, det, unit, verdict, size, (), punctures, ranks)


def certify_over_extended_center(
    family: Sequence[Coloring], boundary: Sequence[int], n: int, punctures: int | None = None
) -> BasisCertificate:
    """Certificate for the curves outside ``boundary`` over characters plus those curves.

    Adjoining k central curves has degree N^k, so the remaining family spans
    a module of rank N^(|E| - k).
    """
    cert = certify_local_basis(family, n, punctures)
    idx = tuple(boundary)
    if len(set(idx)) != len(idx) or any(not 0 <= i < cert.num_edges for i in idx):
        raise ValueError(f"boundary indices {list(idx)} invalid for a family of {cert.num_edges}")
    if cert.verdict is not Verdict.LOCAL_BASIS:
        raise NotABasis(f"full family has determinant {cert.det}, not a unit mod {n}")
    ranks = dict(cert.ranks)
    ranks["overExtendedCenter"] = _rank(n, cert.num_edges - len(idx))
    return BasisCertificate(n, cert.matrix, cert.det, cert.unit, cert.verdict, cert.num_edges, idx, punctures, ranks)


def dimensions(g: int, p: int, n: int) -> dict:
    _check_odd(n)
    if p < 1 or g < 0:
        raise ValueError("need g >= 0 and p >= 1")
    if 2 - 2 * g - p >= 0:
        raise ValueError("Euler characteristic must be negative")
    edges = 6 * g - 6 + 3 * p
    pants = 3 * g - 3 + p
    return {
        "edgeCount": edges,
        "pantsCurveCount": pants,
        "dimOverCharacters": n**edges,
        "dimOverCenter": n ** (edges - p),
        "pantsSubalgebraRank": n**pants,
    }


def triangular_edge_order(curves: Sequence[Sequence[int]]) -> list[tuple[int, int]] | None:
    """Order curves P_1..P_k with edges e_1..e_k so that i(e_i, P_j) = 0 for j > i.

    Greedy: repeatedly find an unused edge met by exactly one of the
    remaining curves; that curve comes next, and its edge misses every curve
    still remaining.  Returns (curve index, edge index) pairs in order, or
    None when the peeling gets stuck, in which case the condition is not
    certified either way.
    """
    remaining = set(range(len(curves)))
    used = set()
    order = []
    ncols = len(curves[0]) if curves else 0
    while remaining:
        for col in range(ncols):
            if col in used:
                continue
            hit = [i for i in remaining if curves[i][col]]
            if len(hit) == 1:
                order.append((hit[0], col))
                used.add(col)
                remaining.discard(hit[0])
                break
        else:
            return None
    return order
