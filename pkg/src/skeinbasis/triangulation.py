"""Ideal triangulations of punctured surfaces.

A triangulation is a list of ideal triangles together with a pairing of their
side slots.  Each pairing is one edge of the triangulation; edges are numbered
in the order the gluings are declared.

Side ``k`` of a triangle runs from its corner ``k`` to corner ``k + 1``
(indices mod 3).  A gluing with ``reversed=True`` (the default) identifies the
two sides with opposite directions, which is what consistently oriented
triangles need in order to give an orientable surface.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Slot = tuple[int, int]  # (triangle index, side index)


@dataclass(frozen=True)
class Gluing:
    first: Slot
    second: Slot
    reversed: bool = True
    name: str | None = None

    def slots(self) -> tuple[Slot, Slot]:
        return (self.first, self.second)

    @property
    def folded(self) -> bool:
        return self.first[0] == self.second[0]


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


class ParseError(ValueError):
    """Malformed triangulation or coloring text; carries the line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Triangulation:
    """Triangles ``0..n-1`` glued along side pairs.

    ``triangle_ids`` keeps the user's ids (from the text format) for
    reporting; all internal indexing is positional.
    """

    num_triangles: int
    gluings: tuple[Gluing, ...]
    triangle_ids: tuple[int, ...] = ()
    _slot_edge: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not self.triangle_ids:
            object.__setattr__(self, "triangle_ids", tuple(range(self.num_triangles)))
        slot_edge = {}
        for e, gl in enumerate(self.gluings):
            for s in gl.slots():
                slot_edge.setdefault(s, e)
        object.__setattr__(self, "_slot_edge", slot_edge)

    @property
    def num_edges(self) -> int:
        return len(self.gluings)

    @property
    def edges(self) -> range:
        return range(len(self.gluings))

    def edge_name(self, e: int) -> str:
        return self.gluings[e].name or str(e)

    def edge_names(self) -> list[str]:
        return [self.edge_name(e) for e in self.edges]

    def edge_at(self, t: int, side: int) -> int:
        return self._slot_edge[(t, side)]

    def triangle_edges(self, t: int) -> tuple[int, int, int]:
        """Edges on sides 0, 1, 2 of triangle ``t``."""
        return tuple(self._slot_edge[(t, k)] for k in range(3))

    def partner(self, t: int, side: int) -> tuple[Slot, bool]:
        """The slot glued to ``(t, side)`` and whether the gluing reverses."""
        gl = self.gluings[self._slot_edge[(t, side)]]
        other = gl.second if gl.first == (t, side) else gl.first
        return other, gl.reversed

    def is_folded(self, t: int) -> bool:
        return len(set(self.triangle_edges(t))) < 3

    def folded_triangles(self) -> list[int]:
        return [t for t in range(self.num_triangles) if self.is_folded(t)]

    @classmethod
    def from_triangles(cls, triangles: Sequence[Sequence], names: Sequence | None = None):
        """Build from triangles given as 3-tuples of edge labels.

        Each label must occur on exactly two sides.  Edges are numbered in
        the order of ``names`` when given, else by first appearance.  All
        gluings are orientation reversing.
        """
        where: dict = {}
        for t, tri in enumerate(triangles):
            if len(tri) != 3:
                raise ValueError(f"triangle {t} does not have three sides")
            for k, label in enumerate(tri):
                where.setdefault(label, []).append((t, k))
        order = list(names) if names is not None else list(where)
        missing = set(where) - set(order)
        if missing:
            raise ValueError(f"labels without an edge position: {sorted(map(str, missing))}")
        gluings = []
        for label in order:
            slots = where.get(label, [])
            if len(slots) != 2:
                raise ValueError(f"edge {label!r} appears on {len(slots)} sides, expected 2")
            gluings.append(Gluing(slots[0], slots[1], True, str(label)))
        return cls(len(triangles), tuple(gluings))


def validate(t: Triangulation) -> ValidationReport:
    """Every side slot must be glued exactly once."""
    problems = []
    seen: dict[Slot, int] = {}
    for e, gl in enumerate(t.gluings):
        if gl.first == gl.second:
            problems.append(f"gluing {e} glues slot {gl.first} to itself")
        for tri, side in gl.slots():
            if not (0 <= tri < t.num_triangles and 0 <= side < 3):
                problems.append(f"gluing {e} refers to nonexistent slot ({tri}, {side})")
                continue
            if (tri, side) in seen:
                problems.append(
                    f"slot {t.triangle_ids[tri]}.{side} glued twice (gluings {seen[(tri, side)]} and {e})"
                )
            else:
                seen[(tri, side)] = e
    for tri in range(t.num_triangles):
        for side in range(3):
            if (tri, side) not in seen:
                problems.append(f"slot {t.triangle_ids[tri]}.{side} is unglued")
    return ValidationReport(tuple(problems))


def euler_characteristic(t: Triangulation) -> int:
    if t.num_triangles % 2:
        raise ValueError("an ideal triangulation has an even number of triangles")
    e = -(t.num_triangles // 2)
    if e >= 0:
        raise ValueError("ideal triangulations need negative Euler characteristic")
    return e


def folded_edges(t: Triangulation) -> set[int]:
    return {e for e, gl in enumerate(t.gluings) if gl.folded}


# ---------------------------------------------------------------------------
# text format
#
#   triangle <id>
#   glue <t1>.<s1> <t2>.<s2> [reversed=no] [name=<label>]
#
# Edge k is the k-th glue line.  '#' starts a comment.

_SLOT = re.compile(r"^(-?\d+)\.([0-9]+)$")


def parse_triangulation(text: str) -> Triangulation:
    ids: list[int] = []
    index: dict[int, int] = {}
    raw = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if words[0] == "triangle":
            if len(words) != 2:
                raise ParseError("expected 'triangle <id>'", lineno)
            try:
                tid = int(words[1])
            except ValueError:
                raise ParseError(f"bad triangle id {words[1]!r}", lineno) from None
            if tid in index:
                raise ParseError(f"triangle {tid} declared twice", lineno)
            index[tid] = len(ids)
            ids.append(tid)
        elif words[0] == "glue":
            if len(words) < 3:
                raise ParseError("expected 'glue <t>.<s> <t>.<s>'", lineno)
            slots = []
            for w in words[1:3]:
                m = _SLOT.match(w)
                if not m:
                    raise ParseError(f"bad slot {w!r}", lineno)
                slots.append((int(m.group(1)), int(m.group(2)), lineno))
            opts = {}
            for w in words[3:]:
                key, sep, val = w.partition("=")
                if not sep or key not in ("reversed", "name"):
                    raise ParseError(f"unknown glue option {w!r}", lineno)
                opts[key] = val
            rev = opts.get("reversed", "yes").lower()
            if rev not in ("yes", "no", "true", "false", "1", "0"):
                raise ParseError(f"bad reversed value {rev!r}", lineno)
            raw.append((slots, rev in ("yes", "true", "1"), opts.get("name"), lineno))
        else:
            raise ParseError(f"unknown directive {words[0]!r}", lineno)
    gluings = []
    for slots, rev, name, lineno in raw:
        resolved = []
        for tid, side, _ in slots:
            if tid not in index:
                raise ParseError(f"undeclared triangle {tid}", lineno)
            if side > 2:
                raise ParseError(f"side index {side} out of range 0..2", lineno)
            resolved.append((index[tid], side))
        gluings.append(Gluing(resolved[0], resolved[1], rev, name))
    return Triangulation(len(ids), tuple(gluings), tuple(ids))


def format_triangulation(t: Triangulation) -> str:
    lines = [f"triangle {tid}" for tid in t.triangle_ids]
    for gl in t.gluings:
        a, b = gl.first, gl.second
        line = f"glue {t.triangle_ids[a[0]]}.{a[1]} {t.triangle_ids[b[0]]}.{b[1]}"
        if not gl.reversed:
            line += " reversed=no"
        if gl.name:
            line += f" name={gl.name}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def once_punctured_torus() -> Triangulation:
    """Two triangles glued along all three sides (3 edges)."""
    return Triangulation.from_triangles([("x", "y", "z"), ("x", "y", "z")])


def side_slots(gluings: Iterable[Gluing]) -> list[Slot]:
    return [s for gl in gluings for s in gl.slots()]
