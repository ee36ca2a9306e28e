import random

import pytest
from hypothesis import given, settings, strategies as st

from skeinbasis.coloring import Coloring, Residue, lift_residue, residue
from skeinbasis.graded_skein import (
    LeadTerm,
    ThreadedWord,
    complementary,
    lead_in_characters,
    lead_of_word,
    product_lead,
    threaded_form,
)
from skeinbasis.surface_gen import SurfaceSpec, build_curves, build_triangulation
from skeinbasis.triangulation import once_punctured_torus

TORUS = once_punctured_torus()
SPEC = SurfaceSpec(3, 1)
T3 = build_triangulation(SPEC)
FAM = build_curves(SPEC)


def test_zero_lead_is_identity():
    u = LeadTerm(Coloring.zero(TORUS), 1)
    v = LeadTerm(Coloring(TORUS, (1, 1, 2)), 2 - 1j)
    w = product_lead(u, v)
    assert w.coloring == v.coloring and w.scalar == v.scalar


def test_scalar_never_zero():
    with pytest.raises(ValueError):
        LeadTerm(Coloring.zero(TORUS), 0)


def test_residue_additive_under_products():
    u = LeadTerm(FAM["a1"], 1j)
    v = LeadTerm(FAM["h2"], -1)
    for n in (3, 5, 9):
        assert product_lead(u, v).residue(n) == u.residue(n) + v.residue(n)


def test_words():
    assert lead_of_word(ThreadedWord(T3)).coloring.is_zero()
    c = FAM["c1"]
    assert lead_of_word(ThreadedWord(T3, ((c, 1),))).coloring == c
    with pytest.raises(ValueError):
        ThreadedWord(T3, ((c, 1), (c, 2)))


def test_threaded_form_examples():
    c = FAM["e1"]
    assert threaded_form(c).factors == ((c, 1),)
    assert threaded_form(c.scale(5)).factors == ((c, 5),)
    assert threaded_form(Coloring.zero(T3)).factors == ()
    f = FAM["a1"].scale(2) + FAM["a2"] + FAM["c1"].scale(3)
    word = threaded_form(f)
    assert dict(word.factors) == {FAM["a1"]: 2, FAM["a2"]: 1, FAM["c1"]: 3}
    assert lead_of_word(word).coloring == f


def test_characters():
    c = FAM["h1"]
    assert lead_in_characters(c.scale(7), 7)
    assert lead_in_characters(Coloring.zero(T3), 5)
    assert not lead_in_characters(lift_residue(T3, Residue((1,) + (0,) * 14, 5)), 5)


def test_complementary_examples():
    r = Residue((1, 2, 0, 4), 5)
    assert complementary(r, -r)
    z = Residue((0, 0, 0, 0), 5)
    assert complementary(z, z)
    assert not complementary(r, r)
    with pytest.raises(ValueError):
        complementary(r, Residue((1, 2, 0, 4), 7))


P_CURVES = [c for _, c in FAM.P]


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=len(P_CURVES), max_size=len(P_CURVES)))
def test_threaded_form_inverts_lead(levels):
    # disjoint pants curves: any combination is a simple diagram with these parts
    f = Coloring.zero(T3)
    for c, k in zip(P_CURVES, levels):
        f = f + c.scale(k)
    word = threaded_form(f)
    assert lead_of_word(word).coloring == f
    assert dict(word.factors) == {c: k for c, k in zip(P_CURVES, levels) if k}


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([3, 5, 7, 9, 15]), st.randoms(use_true_random=False))
def test_complementary_random(n, rnd):
    r1 = Residue(tuple(rnd.randrange(n) for _ in range(6)), n)
    r2 = Residue(tuple(rnd.randrange(n) for _ in range(6)), n)
    expected = all((a + b) % n == 0 for a, b in zip(r1.values, r2.values))
    assert complementary(r1, r2) == expected
    assert complementary(r1, -r1)


def test_characters_submonoid():
    rng = random.Random(5)
    curves = [c for _, c in FAM.curves]
    for _ in range(200):
        f = rng.choice(curves).scale(5 * rng.randint(0, 3))
        g = rng.choice(curves).scale(5 * rng.randint(0, 3))
        assert lead_in_characters(f + g, 5)
        assert residue(f + g, 5).is_zero()
