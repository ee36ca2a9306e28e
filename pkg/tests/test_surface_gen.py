import pytest
import sympy

from skeinbasis.exactlinalg import det_exact
from skeinbasis.surface_gen import (
    LEX,
    GeneratorError,
    Lexicon,
    SurfaceSpec,
    block_reduction,
    bottom_block,
    build_curves,
    build_triangulation,
    edge_labels,
    family_of,
    intersection_matrix,
    pants_problems,
    verify_pants_split,
)

from oracles import load_golden_genus4, load_puncture_block_p5


def test_lexicon_relations():
    assert LEX.relations_hold()
    assert not Lexicon(f=(3, 3, 2, 2)).relations_hold()


def test_spec_validation():
    with pytest.raises(ValueError):
        SurfaceSpec(0, 2)
    with pytest.raises(ValueError):
        SurfaceSpec(2, 0)
    with pytest.raises(ValueError):
        build_curves(SurfaceSpec(1, 3))


def test_edge_order_genus4():
    labels = edge_labels(SurfaceSpec(4, 1))
    assert labels[:5] == ["h1.1", "h1.2", "h1.3", "h1.4", "b1"]
    assert labels[5:11] == ["f2", "h2.1", "h2.2", "h2.3", "h2.4", "b2"]
    assert labels[-4:] == ["h4.1", "h4.2", "h4.3", "h4.4"]
    assert len(labels) == 21
    assert edge_labels(SurfaceSpec(2, 4))[-7:] == ["d1", "v1", "b3", "d2", "v2", "b4", "fo"]


def test_small_shapes():
    t = build_triangulation(SurfaceSpec(2, 1))
    assert (t.num_edges, t.num_triangles) == (9, 6)
    assert intersection_matrix(SurfaceSpec(2, 1)).nrows == 9


def test_golden_genus4():
    names, rows = load_golden_genus4()
    fam = build_curves(SurfaceSpec(4, 1))
    assert fam.names == names
    assert intersection_matrix(SurfaceSpec(4, 1)).tolist() == rows
    assert fam["a1"].values == (1, 1, 0, 1) + (0,) * 17
    assert fam["del1"].values == (2,) * 21
    assert names[11:17] == ["a3", "b3", "e3", "s3", "h3", "c2"]


@pytest.mark.parametrize("g", [2, 3, 4, 6])
def test_family_sizes(g):
    for p in (1, 2, 4):
        fam = build_curves(SurfaceSpec(g, p))
        assert len(fam.P) == len(fam.Q) == 3 * g - 3 + p
        assert len(fam.boundaries) == p
        assert len(fam.curves) == 6 * g - 6 + 3 * p
        assert {family_of(n) for n in fam.names} == {"P", "Q", "boundary"}


@pytest.mark.parametrize("g,p", [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3), (3, 3), (2, 5), (4, 4)])
def test_families_are_pants_decompositions(g, p):
    assert pants_problems(build_curves(SurfaceSpec(g, p))) == []


def test_det_matches_sympy():
    for g, p in [(2, 1), (3, 2), (2, 4), (4, 3)]:
        m = intersection_matrix(SurfaceSpec(g, p))
        assert det_exact(m) == sympy.Matrix(m.tolist()).det()


def test_one_puncture_examples():
    assert verify_pants_split(SurfaceSpec(2, 1)).det == -(2**5)
    cert = verify_pants_split(SurfaceSpec(4, 1), (3, 5, 7, 9, 15))
    assert cert.det == -8192 and cert.certified
    assert cert.to_dict()["det"] == "-8192"


def test_multi_puncture_exponent_pattern():
    # no closed form is claimed for K; record what the generator gives
    for g in range(2, 5):
        for p in range(2, 6):
            cert = verify_pants_split(SurfaceSpec(g, p))
            assert cert.exponent == 4 * g + 2 * p - 5


def test_alternative_s_row_is_singular():
    for g, p in [(2, 2), (3, 3), (2, 4)]:
        assert det_exact(intersection_matrix(SurfaceSpec(g, p), alternate_s_g=True)) == 0


def test_block_reduction_one_puncture():
    assert block_reduction(SurfaceSpec(2, 1)) == [-8, 4]
    assert block_reduction(SurfaceSpec(4, 1)) == [-8, 16, 16, 4]


def test_block_reduction_multi():
    for g, p in [(2, 3), (3, 4), (4, 5)]:
        dets = block_reduction(SurfaceSpec(g, p))
        assert dets[0] == -8
        assert all(abs(d) == 16 for d in dets[1:-1])
        assert abs(dets[-1]) == 2 ** (2 * p - 4)


def test_bottom_block():
    assert bottom_block(5).tolist() == load_puncture_block_p5()
    assert abs(det_exact(bottom_block(3))) == 4
    assert bottom_block(3).nrows == 3
    with pytest.raises(ValueError):
        bottom_block(2)


def test_generator_rejects_even_modulus():
    with pytest.raises(ValueError):
        verify_pants_split(SurfaceSpec(2, 1), (4,))


def test_generator_error_type():
    assert issubclass(GeneratorError, RuntimeError)
