"""Lead terms of skeins and Chebyshev-threaded primitive words.

Only lead data is tracked.  A lead term is a coloring together with a nonzero
scalar, understood up to powers of A: the exact power that appears in a
product is never computed because nothing here depends on it.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coloring import Coloring, ContextMismatch, Residue, _same_residue_space, add, residue
from .normal_curves import primitive_decomposition
from .triangulation import Triangulation


@dataclass(frozen=True)
class LeadTerm:
    coloring: Coloring
    scalar: complex = 1

    def __post_init__(self):
        if self.scalar == 0:
            raise ValueError("a lead term has a nonzero coefficient")

    def residue(self, n: int) -> Residue:
        return residue(self.coloring, n)


@dataclass(frozen=True)
class ThreadedWord:
    """Product of T_k(C) over distinct primitive curves C, as (coloring, k) pairs."""

    triangulation: Triangulation
    factors: tuple[tuple[Coloring, int], ...] = ()

    def __post_init__(self):
        seen = set()
        for c, k in self.factors:
            if c.triangulation != self.triangulation:
                raise ContextMismatch("factor lives on another triangulation")
            if k < 0:
                raise ValueError("threading levels are nonnegative")
            if c.values in seen:
                raise ValueError(f"curve {c.values} appears twice in one word")
            seen.add(c.values)


def product_lead(u: LeadTerm, v: LeadTerm) -> LeadTerm:
    """Lead term of a product: colorings add, coefficients multiply."""
    return LeadTerm(add(u.coloring, v.coloring), u.scalar * v.scalar)


def lead_of_word(w: ThreadedWord) -> LeadTerm:
    # T_k is monic, so the lead of T_k(C) is k parallel copies of C
    total = Coloring.zero(w.triangulation)
    for c, k in w.factors:
        total = total + c.scale(k)
    return LeadTerm(total, 1)


def threaded_form(f: Coloring) -> ThreadedWord:
    """The threaded primitive word whose lead coloring is ``f``."""
    parts = primitive_decomposition(f).parts
    return ThreadedWord(f.triangulation, tuple(parts))


def lead_in_characters(f: Coloring, n: int) -> bool:
    """Whether the diagram's lead term has zero residue mod ``n``."""
    return residue(f, n).is_zero()


def complementary(r1: Residue, r2: Residue) -> bool:
    """Residues summing to zero, which certifies a nonzero trace pairing."""
    _same_residue_space(r1, r2)
    return (r1 + r2).is_zero()
