"""Acceptance gate: one test per criterion, summarized at the end of the run."""
import random
import time
from collections import Counter

from skeinbasis.basis_checker import dimensions
from skeinbasis.chebyshev import (
    chebyshev_T,
    chebyshev_T_closed,
    compose_check,
    de_moivre_check,
    product_to_sum_check,
)
from skeinbasis.coloring import Coloring, Residue, add, is_admissible, lex_compare, lift_residue, residue
from skeinbasis.exactlinalg import det_exact
from skeinbasis.normal_curves import primitive_decomposition, trace_components
from skeinbasis.surface_gen import (
    SurfaceSpec,
    block_reduction,
    bottom_block,
    build_curves,
    build_triangulation,
    intersection_matrix,
    verify_pants_split,
)
from skeinbasis.triangulation import once_punctured_torus

from oracles import (
    brute_components,
    load_golden_genus4,
    load_puncture_block_p5,
    parity_patterns,
    random_admissible,
    random_admissible_large,
    random_triangulation,
)

MODULI = (3, 5, 7, 9, 15)


def test_golden_matrix(criterion):
    criterion("1. golden 21x21 matrix for genus 4, one puncture (exact, < 0.1 s)")
    _, golden = load_golden_genus4()
    start = time.perf_counter()
    m = intersection_matrix(SurfaceSpec(4, 1))
    elapsed = time.perf_counter() - start
    print(f"criterion 1: generated in {elapsed * 1000:.2f} ms")
    assert m.tolist() == golden
    assert elapsed < 0.1


def test_one_puncture_formula(criterion):
    criterion("2. det = -2^(4g-3) for one puncture, g = 2..10 (exact, < 5 s)")
    start = time.perf_counter()
    for g in range(2, 11):
        assert det_exact(intersection_matrix(SurfaceSpec(g, 1))) == -(2 ** (4 * g - 3))
    elapsed = time.perf_counter() - start
    print(f"criterion 2: sweep took {elapsed:.3f} s")
    assert elapsed < 5


def test_block_determinants(criterion):
    criterion("3. block dets -2^3, 2^4 per middle handle, 2^2 (exact)")
    for g in range(2, 11):
        dets = block_reduction(SurfaceSpec(g, 1))
        assert dets == [-(2**3)] + [2**4] * (g - 2) + [2**2], (g, dets)


def test_bottom_puncture_block(criterion):
    criterion("4. puncture block matches p=5 display, |det| = 2^(2p-4) for p = 3..8")
    assert bottom_block(5).tolist() == load_puncture_block_p5()
    for p in range(3, 9):
        assert abs(det_exact(bottom_block(p))) == 2 ** (2 * p - 4), p


def test_multi_puncture_sweep(criterion):
    criterion("5. multi-puncture |det| = 2^K, unit mod 3,5,7,9,15, ranks (g,p <= 6, < 60 s)")
    start = time.perf_counter()
    for g in range(2, 7):
        for p in range(2, 7):
            cert = verify_pants_split(SurfaceSpec(g, p), MODULI)
            assert abs(cert.det) == 2**cert.exponent
            assert cert.certified
            ranks = cert.ranks()
            for n in MODULI:
                entry = ranks["byModulus"][str(n)]
                assert entry["pantsFactor"] == str(n ** (3 * g - 3 + p))
                assert entry["overCenter"] == str(n ** (6 * g - 6 + 2 * p))
                assert int(entry["pantsFactor"]) ** 2 == int(entry["overCenter"])
    elapsed = time.perf_counter() - start
    print(f"criterion 5: sweep took {elapsed:.3f} s")
    assert elapsed < 60


def _test_triangulations(rng):
    ts = [once_punctured_torus()]
    ts += [build_triangulation(SurfaceSpec(g, p)) for g, p in [(2, 1), (2, 3), (3, 2), (4, 1), (1, 4)]]
    ts += [random_triangulation(rng, 6), random_triangulation(rng, 4, orientable=False)]
    return ts


def test_residue_surjectivity(criterion):
    criterion("6. 1000 random residues per (triangulation, N) lift and round-trip")
    rng = random.Random(2024)
    count = 0
    for t in _test_triangulations(rng):
        for n in MODULI:
            for _ in range(1000):
                g = Residue(tuple(rng.randrange(n) for _ in range(t.num_edges)), n)
                f = lift_residue(t, g)
                assert is_admissible(t, f.values)
                assert residue(f, n) == g
                count += 1
    print(f"criterion 6: {count} lifts checked")


def test_chebyshev_suite(criterion):
    criterion("7. Chebyshev closed form k<=60, product-to-sum a,b<=30, composition a,b<=12, De Moivre k<=20")
    for k in range(61):
        assert chebyshev_T_closed(k) == chebyshev_T(k)
    for a in range(31):
        for b in range(31):
            assert product_to_sum_check(a, b)
    for a in range(13):
        for b in range(13):
            assert compose_check(a, b)
    import cmath

    for k in range(21):
        for j in range(100):
            assert de_moivre_check(k, cmath.exp(2j * cmath.pi * j / 100))
        assert de_moivre_check(k, 1.5 - 0.5j)


def _coloring_sources(rng):
    sources = []
    for tri_count in (2, 4, 6):
        t = random_triangulation(rng, tri_count)
        pats = parity_patterns(t)
        sources.append((t, lambda t=t, pats=pats: random_admissible(rng, t, pats)))
    for g, p in [(2, 1), (3, 2), (2, 4)]:
        fam = build_curves(SurfaceSpec(g, p))
        t = fam.triangulation
        vecs = [c.values for _, c in fam.curves]
        sources.append((t, lambda t=t, vecs=vecs: random_admissible_large(rng, t, vecs)))
    return sources


def test_monoid_and_order_laws(criterion):
    criterion("8. closure, lex total order, translation compatibility, residue homomorphism (10^4 each)")
    rng = random.Random(8)
    sources = _coloring_sources(rng)
    failures = Counter()
    for _ in range(10**4):
        t, draw = rng.choice(sources)
        f, g, h = (Coloring(t, draw()) for _ in range(3))
        n = rng.choice(MODULI)
        if not is_admissible(t, add(f, g).values):
            failures["closure"] += 1
        c_fg, c_gh, c_fh = lex_compare(f, g), lex_compare(g, h), lex_compare(f, h)
        total = c_fg == -lex_compare(g, f) and (c_fg == 0) == (f == g)
        transitive = not (c_fg <= 0 and c_gh <= 0) or c_fh <= 0
        if not (total and transitive):
            failures["order"] += 1
        if c_fg < 0 and not lex_compare(f + h, g + h) < 0:
            failures["translation"] += 1
        if c_fg > 0 and not lex_compare(f + h, g + h) > 0:
            failures["translation"] += 1
        if residue(f + g, n) != residue(f, n) + residue(g, n):
            failures["homomorphism"] += 1
    print(f"criterion 8: failures {dict(failures)}")
    assert not failures


def test_normal_curve_oracle(criterion):
    criterion("9. decomposition vs independent union-find trace, <= 6 triangles, entries <= 8 (10^3 cases)")
    rng = random.Random(9)
    failures = Counter()
    for case in range(1000):
        t = random_triangulation(rng, rng.choice((2, 4, 6)))
        vals = random_admissible(rng, t, parity_patterns(t), top=8)
        f = Coloring(t, vals)
        dec = primitive_decomposition(f)
        oracle = brute_components(t, vals)
        if Counter({c.values: k for c, k in dec.parts}) != oracle:
            failures["oracle"] += 1
        if dec.reconstruct(t) != f:
            failures["reconstruction"] += 1
        if any(len(trace_components(c)) != 1 for c, _ in dec.parts):
            failures["primitive"] += 1
        k = rng.randint(2, 4)
        if primitive_decomposition(f.scale(k)) != dec.scaled(k):
            failures["parallel"] += 1
        if brute_components(t, f.scale(k).values) != Counter({c: m * k for c, m in oracle.items()}):
            failures["oracle-parallel"] += 1
    print(f"criterion 9: failures {dict(failures)}")
    assert not failures


def test_dimension_bookkeeping(criterion):
    criterion("10. dimension formulas and dimOverCharacters = N^p dimOverCenter")
    cells = 0
    for g in range(0, 11):
        for p in range(1, 9):
            if 2 - 2 * g - p >= 0:
                continue
            for n in (1,) + MODULI:
                d = dimensions(g, p, n)
                assert d["dimOverCharacters"] == n ** (6 * g - 6 + 3 * p)
                assert d["dimOverCenter"] == n ** (6 * g - 6 + 2 * p)
                assert d["dimOverCharacters"] == n**p * d["dimOverCenter"]
                assert d["pantsSubalgebraRank"] == n ** (3 * g - 3 + p)
                assert d["edgeCount"] == 2 * d["pantsCurveCount"] + p
                cells += 1
    print(f"criterion 10: {cells} cells")
