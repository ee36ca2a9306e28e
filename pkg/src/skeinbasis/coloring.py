"""Admissible colorings of an ideal triangulation and their residues mod N.

A coloring assigns a nonnegative integer to every edge.  It is admissible
when, in every triangle, the three values have even sum and satisfy the
triangle inequalities.  For a folded triangle (sides a, a, b) those
conditions reduce to ``b`` even and ``2a >= b``, so one check covers both.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .triangulation import ParseError, Triangulation


class ContextMismatch(ValueError):
    """Two colorings (or residues) do not live on the same edge set."""


class NotAdmissible(ValueError):
    pass


def triple_ok(x: int, y: int, z: int) -> bool:
    return (x + y + z) % 2 == 0 and x <= y + z and y <= x + z and z <= x + y


def admissibility_violations(t: Triangulation, values: Sequence[int]) -> list[str]:
    if len(values) != t.num_edges:
        raise ValueError(f"expected {t.num_edges} values, got {len(values)}")
    out = []
    for e, v in enumerate(values):
        if v < 0:
            out.append(f"edge {t.edge_name(e)} has negative value {v}")
    for tri in range(t.num_triangles):
        edges = t.triangle_edges(tri)
        w = [values[e] for e in edges]
        if not triple_ok(*w):
            names = ",".join(t.edge_name(e) for e in edges)
            out.append(f"triangle {t.triangle_ids[tri]} ({names}) has weights {tuple(w)}")
    return out


def is_admissible(t: Triangulation, values: Sequence[int]) -> bool:
    if len(values) != t.num_edges:
        raise ValueError(f"expected {t.num_edges} values, got {len(values)}")
    if any(v < 0 for v in values):
        return False
    for tri in range(t.num_triangles):
        a, b, c = t.triangle_edges(tri)
        if not triple_ok(values[a], values[b], values[c]):
            return False
    return True


def _check_modulus(n: int) -> None:
    if not isinstance(n, int) or n < 1 or n % 2 == 0:
        raise ValueError(f"modulus must be an odd integer >= 1, got {n!r}")


@dataclass(frozen=True, eq=True)
class Coloring:
    """An admissible coloring; ``values[k]`` is the weight on edge ``k``."""

    triangulation: Triangulation
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        bad = admissibility_violations(self.triangulation, self.values)
        if bad:
            raise NotAdmissible("; ".join(bad))

    @classmethod
    def zero(cls, t: Triangulation) -> "Coloring":
        return cls(t, (0,) * t.num_edges)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, e):
        return self.values[e]

    def __iter__(self):
        return iter(self.values)

    def __add__(self, other: "Coloring") -> "Coloring":
        return add(self, other)

    def scale(self, k: int) -> "Coloring":
        if k < 0:
            raise ValueError("scale factor must be nonnegative")
        return Coloring(self.triangulation, tuple(k * v for v in self.values))

    def is_zero(self) -> bool:
        return not any(self.values)

    def __lt__(self, other: "Coloring") -> bool:
        return lex_compare(self, other) < 0

    def __le__(self, other: "Coloring") -> bool:
        return lex_compare(self, other) <= 0

    def __gt__(self, other: "Coloring") -> bool:
        return lex_compare(self, other) > 0

    def __ge__(self, other: "Coloring") -> bool:
        return lex_compare(self, other) >= 0

    def __repr__(self):
        return f"Coloring{self.values}"


@dataclass(frozen=True)
class Residue:
    values: tuple[int, ...]
    modulus: int

    def __post_init__(self):
        _check_modulus(self.modulus)
        vals = tuple(int(v) for v in self.values)
        for v in vals:
            if not 0 <= v < self.modulus:
                raise ValueError(f"residue entry {v} outside [0, {self.modulus})")
        object.__setattr__(self, "values", vals)

    @classmethod
    def reduce(cls, values: Sequence[int], n: int) -> "Residue":
        _check_modulus(n)
        return cls(tuple(v % n for v in values), n)

    def __add__(self, other: "Residue") -> "Residue":
        _same_residue_space(self, other)
        return Residue.reduce([a + b for a, b in zip(self.values, other.values)], self.modulus)

    def __neg__(self) -> "Residue":
        return Residue.reduce([-v for v in self.values], self.modulus)

    def is_zero(self) -> bool:
        return not any(self.values)


def _same_residue_space(r1: Residue, r2: Residue) -> None:
    if r1.modulus != r2.modulus:
        raise ContextMismatch(f"moduli differ: {r1.modulus} vs {r2.modulus}")
    if len(r1.values) != len(r2.values):
        raise ContextMismatch("residues have different lengths")


def _same_context(f: Coloring, g: Coloring) -> None:
    if f.triangulation is not g.triangulation and f.triangulation != g.triangulation:
        raise ContextMismatch("colorings belong to different triangulations")


def add(f: Coloring, g: Coloring) -> Coloring:
    _same_context(f, g)
    return Coloring(f.triangulation, tuple(a + b for a, b in zip(f.values, g.values)))


def lex_compare(f: Coloring, g: Coloring) -> int:
    """-1, 0 or 1 as ``f`` is below, equal to, or above ``g``."""
    _same_context(f, g)
    return (f.values > g.values) - (f.values < g.values)


def residue(f: Coloring | Sequence[int], n: int) -> Residue:
    values = f.values if isinstance(f, Coloring) else f
    return Residue.reduce(values, n)


def lift_residue(t: Triangulation, g: Residue) -> Coloring:
    """An admissible coloring reducing to ``g``.

    Odd entries become ``g + 3N`` and even ones ``g + 2N``.  Since N is odd
    every value comes out even, and any three values in ``[2N, 4N)`` satisfy
    the triangle inequalities.
    """
    if len(g.values) != t.num_edges:
        raise ContextMismatch(f"residue has {len(g.values)} entries, triangulation has {t.num_edges} edges")
    n = g.modulus
    return Coloring(t, tuple(v + (3 * n if v % 2 else 2 * n) for v in g.values))


# ---------------------------------------------------------------------------
# coloring files: one "color <edge_index> <value>" per line, missing edges 0


def parse_values(text: str, num_edges: int) -> list[int]:
    """Edge values from the coloring file format, without any admissibility check."""
    values = [0] * num_edges
    seen = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if words[0] != "color" or len(words) != 3:
            raise ParseError("expected 'color <edge> <value>'", lineno)
        try:
            e, v = int(words[1]), int(words[2])
        except ValueError:
            raise ParseError("edge and value must be integers", lineno) from None
        if not 0 <= e < num_edges:
            raise ParseError(f"edge {e} out of range 0..{num_edges - 1}", lineno)
        if v < 0:
            raise ParseError(f"negative value {v}", lineno)
        if e in seen:
            raise ParseError(f"edge {e} colored twice", lineno)
        seen.add(e)
        values[e] = v
    return values


def parse_coloring(text: str, t: Triangulation) -> Coloring:
    values = parse_values(text, t.num_edges)
    bad = admissibility_violations(t, values)
    if bad:
        raise ParseError("coloring is not admissible: " + "; ".join(bad))
    return Coloring(t, tuple(values))


def format_coloring(f: Coloring | Sequence[int]) -> str:
    values = f.values if isinstance(f, Coloring) else f
    return "".join(f"color {e} {v}\n" for e, v in enumerate(values) if v)
