"""Recover the simple diagram behind an admissible coloring.

Conventions.  Side ``k`` of a triangle runs from corner ``k`` to corner
``k + 1``; the ``w`` points where the diagram crosses that side are numbered
``0..w-1`` starting at corner ``k``.  Corner ``k`` sits between sides ``k - 1``
and ``k`` and holds ``n`` nested arcs; arc ``j`` joins point ``j`` of side ``k``
to point ``w_{k-1} - 1 - j`` of side ``k - 1``.  A reversing gluing matches
point ``j`` with point ``w - 1 - j`` on the partner side.  Components are the
cycles of these two pairings.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .coloring import Coloring
from .triangulation import Triangulation


class FoldedUnsupported(ValueError):
    """Tracing was asked to run through a folded triangle."""


@dataclass(frozen=True)
class CornerData:
    """``counts[t][k]`` is the number of arcs cutting off the corner opposite side ``k``."""

    counts: tuple[tuple[int, int, int], ...]


def local_corner_counts(w0: int, w1: int, w2: int) -> tuple[int, int, int]:
    """Arc counts at the corners opposite sides 0, 1, 2 of one triangle."""
    w = (w0, w1, w2)
    out = []
    for k in range(3):
        twice = w[(k + 1) % 3] + w[(k + 2) % 3] - w[k]
        if twice < 0 or twice % 2:
            raise ValueError(f"weights {w} are not admissible")
        out.append(twice // 2)
    return tuple(out)


def _refuse_folded(t: Triangulation, allow_folded: bool) -> None:
    if not allow_folded:
        folded = t.folded_triangles()
        if folded:
            ids = [t.triangle_ids[i] for i in folded]
            raise FoldedUnsupported(f"triangulation has folded triangles {ids}")


def corner_counts(f: Coloring, allow_folded: bool = False) -> CornerData:
    t = f.triangulation
    _refuse_folded(t, allow_folded)
    return CornerData(
        tuple(local_corner_counts(*(f[e] for e in t.triangle_edges(tri))) for tri in range(t.num_triangles))
    )


def trace_components(f: Coloring, allow_folded: bool = False) -> list[Coloring]:
    """Colorings of the connected components of the diagram of ``f``.

    Folded triangles are refused unless ``allow_folded`` is set; the corner
    pairing above is still well defined for them, it is just not needed by
    the basis checks for arbitrary input.
    """
    t = f.triangulation
    _refuse_folded(t, allow_folded)
    ne = t.num_edges

    def weight(tri, side):
        return f[t.edge_at(tri, side)]

    # in-triangle pairing of (triangle, side, point) triples
    inner = {}
    for tri in range(t.num_triangles):
        w = [weight(tri, k) for k in range(3)]
        opp = local_corner_counts(*w)
        for k in range(3):
            n = opp[(k + 1) % 3]  # corner k is opposite side k+1
            prev = (k - 1) % 3
            for j in range(n):
                a = (tri, k, j)
                b = (tri, prev, w[prev] - 1 - j)
                inner[a] = b
                inner[b] = a

    seen = set()
    comps = []
    for tri in range(t.num_triangles):
        for side in range(3):
            for j in range(weight(tri, side)):
                start = (tri, side, j)
                if start in seen:
                    continue
                counts = [0] * ne
                x = start
                while x not in seen:
                    y = inner[x]
                    seen.add(x)
                    seen.add(y)
                    ty, sy, jy = y
                    counts[t.edge_at(ty, sy)] += 1
                    (t2, s2), rev = t.partner(ty, sy)
                    w = weight(ty, sy)
                    x = (t2, s2, w - 1 - jy if rev else jy)
                comps.append(Coloring(t, tuple(counts)))
    return comps


@dataclass(frozen=True)
class PrimitiveDecomposition:
    parts: tuple[tuple[Coloring, int], ...]

    def reconstruct(self, t: Triangulation) -> Coloring:
        total = [0] * t.num_edges
        for c, k in self.parts:
            for e, v in enumerate(c.values):
                total[e] += k * v
        return Coloring(t, tuple(total))

    def scaled(self, k: int) -> "PrimitiveDecomposition":
        return PrimitiveDecomposition(tuple((c, m * k) for c, m in self.parts))


def primitive_decomposition(f: Coloring, allow_folded: bool = False) -> PrimitiveDecomposition:
    """Group traced components by coloring; parts sorted lexicographically, largest first."""
    groups = Counter(trace_components(f, allow_folded=allow_folded))
    parts = sorted(groups.items(), key=lambda item: item[0].values, reverse=True)
    return PrimitiveDecomposition(tuple(parts))


def is_connected(f: Coloring, allow_folded: bool = False) -> bool:
    return len(trace_components(f, allow_folded=allow_folded)) == 1


def disjoint(f: Coloring, g: Coloring, allow_folded: bool = False) -> bool:
    """Whether two connected curves can be realized disjointly.

    Normal curves are disjoint exactly when the diagram of ``f + g`` splits
    back into ``f`` and ``g``.
    """
    comps = trace_components(f + g, allow_folded=allow_folded)
    return sorted(c.values for c in comps) == sorted([f.values, g.values])
