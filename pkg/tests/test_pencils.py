import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from collineation.errors import EmptySpec, NotBinaryForm, OutOfRange, ParseError, WrongDims
from collineation.ideals import Ideal, hilbert_data, implicitize, saturate_irrelevant
from collineation.labels import CollineationLabel, rnc
from collineation.pencils import (
    Block,
    admissible,
    admissible_ks,
    build_pencil,
    check_saturation_property,
    classify_pencil,
    format_blocks,
    parse_blocks,
    pencil_base_degree,
    pencil_matrix,
    random_pencil,
    stratum_dimension,
)
from collineation.polyring import PolyRing
from collineation.tensors import LinearFormMatrix, linear_matrix, minors, span_basis, unit_tensor

P = PolyRing(2)
x0, x1 = P.gens()


# -- construction --------------------------------------------------------------

def test_jordan_block_of_size_one():
    M = pencil_matrix([Block("J", 1, Fraction(5))])
    assert M.rows == ((x0 + x1.scale(5),),)


def test_shapes_add_up():
    assert build_pencil("L1+R1").dims == (2, 3, 3)
    assert build_pencil("L2+J3(1)+R1").dims == (2, 2 + 3 + 2, 3 + 3 + 1)


def test_jordan_superdiagonal():
    M = pencil_matrix(parse_blocks("J2(-1)"))
    assert M.rows == ((x0 - x1, x1), (P.zero(), x0 - x1))


def test_block_language_round_trip():
    text = "L2+J3(1/2)+R1"
    assert format_blocks(parse_blocks(text)) == text
    assert parse_blocks(" J1(-3) + L1 ") == [Block("J", 1, Fraction(-3)), Block("L", 1)]


@pytest.mark.parametrize("bad", ["", "X2", "J2", "L2(1)", "J2(a)", "L0x", "L2++R1"])
def test_block_language_errors(bad):
    with pytest.raises(ParseError):
        parse_blocks(bad)


def test_empty_pencil():
    with pytest.raises(EmptySpec):
        build_pencil([])


# -- base degree and classification ------------------------------------------

def test_base_degree_examples():
    assert pencil_base_degree(build_pencil("L2"), 2) == 0
    assert pencil_base_degree(build_pencil("J2(0)"), 2) == 2
    assert pencil_base_degree(build_pencil("J2(0)+J1(1)"), 2) == 0


def test_classification_examples():
    generic = build_pencil("J1(0)+J1(1)+J1(-1)")
    assert classify_pencil(generic, 2) == rnc(2)
    assert classify_pencil(build_pencil("J3(0)"), 3) == CollineationLabel("Point")
    assert classify_pencil(build_pencil("L2"), 2) == rnc(2)
    assert classify_pencil(build_pencil("L1+L1"), 2) == rnc(2)


def test_rnc_aliases():
    assert rnc(1).same_variety(CollineationLabel("Line"))
    assert rnc(2).same_variety(CollineationLabel("Conic"))
    assert rnc(0) == CollineationLabel("Point")


def test_inadmissible_k_is_undefined():
    label = classify_pencil(build_pencil("L2"), 3)
    assert label.kind == "Undefined" and label.reason
    assert classify_pencil(build_pencil("J1(0)+J1(0)+J1(1)"), 4).kind == "Undefined"


def test_square_determinant_case():
    # k = n2 = n3: the single minor is the determinant
    assert classify_pencil(build_pencil("J1(0)+J1(1)"), 2) == CollineationLabel("Point")


def test_admissibility():
    assert admissible(3, 3, 2) is None
    assert admissible(3, 3, 3) is not None
    assert admissible(3, 4, 3) is None
    assert admissible(3, 4, 0) is not None
    assert admissible_ks(3, 3) == [1, 2]
    assert admissible_ks(2, 5) == [1, 2]


def test_classify_needs_pencil():
    with pytest.raises(WrongDims):
        classify_pencil(unit_tensor(), 2)


def test_pencil_with_rank_one_member_maps_to_a_line():
    T = build_pencil("J1(0)+J1(0)+J1(1)")
    assert pencil_base_degree(T, 2) == 1
    assert classify_pencil(T, 2) == rnc(1)


@given(st.lists(st.sampled_from([Fraction(0), Fraction(1)]), min_size=3, max_size=5), st.integers(0, 2))
@settings(max_examples=30, deadline=None)
def test_rank_one_member_bounds_every_curve_degree(lams, extra_l):
    # repeated eigenvalues give members of rank <= 1 once a value repeats enough
    blocks = [Block("J", 1, lam) for lam in lams] + [Block("L", 1)] * extra_l
    T = build_pencil(blocks)
    if len(set(lams)) < 2 and not extra_l:
        return
    if pencil_base_degree(T, 2) == 0:
        return
    for k in admissible_ks(*T.dims[1:]):
        label = classify_pencil(T, k)
        assert label.kind == "Point" or (label.kind in ("RNC", "Line") and label.degree <= 1)


# -- the saturation property ---------------------------------------------------

def test_saturation_property_examples():
    assert check_saturation_property(pencil_matrix(parse_blocks("J2(0)")), 2)
    assert check_saturation_property(pencil_matrix(parse_blocks("L2+J1(1)")), 2)


def test_saturation_property_rejects_three_variables():
    R3 = PolyRing(3)
    M = LinearFormMatrix(R3, tuple(tuple(r) for r in [[R3.gen(0), R3.gen(1)], [R3.gen(2), R3.gen(0)]]))
    with pytest.raises(NotBinaryForm):
        check_saturation_property(M, 2)


@pytest.mark.parametrize("seed", range(12))
def test_saturation_property_on_random_pencils(seed):
    rng = random.Random(seed)
    _, T = random_pencil(rng, 5, 6)
    M = linear_matrix(T)
    for r in admissible_ks(*T.dims[1:]):
        assert check_saturation_property(M, r)


# -- agreement of the gcd path with the Groebner and implicitization paths ---

@pytest.mark.parametrize("seed", range(15))
def test_gcd_path_agrees_with_groebner_path(seed):
    rng = random.Random(100 + seed)
    _, T = random_pencil(rng, 5, 6)
    M = linear_matrix(T)
    for k in admissible_ks(*T.dims[1:]):
        ms = [m for m in minors(M, k) if m]
        if not ms:
            continue
        p = pencil_base_degree(T, k)
        data = hilbert_data(saturate_irrelevant(Ideal(P, ms)))
        assert data.degree == p if p else data.dim == -1


@pytest.mark.parametrize("seed", range(8))
def test_implicitization_sees_the_same_curve(seed):
    rng = random.Random(200 + seed)
    _, T = random_pencil(rng, 4, 5)
    M = linear_matrix(T)
    for k in admissible_ks(*T.dims[1:]):
        basis = span_basis(minors(M, k))
        if not basis:
            continue
        d = k - pencil_base_degree(T, k)
        img = implicitize(basis)
        if d == 0:
            assert img.hilbert.dim == 0
        else:
            assert (img.hilbert.dim, img.hilbert.degree, img.span_dim) == (1, d, d + 1)


def test_classification_survives_row_and_column_operations():
    rng = random.Random(7)
    for _ in range(10):
        blocks, T = random_pencil(rng, 5, 6)
        plain = build_pencil(blocks)
        for k in admissible_ks(*T.dims[1:]):
            assert classify_pencil(T, k) == classify_pencil(plain, k)


# -- strata dimensions -------------------------------------------------------

def test_strata_examples():
    assert stratum_dimension(3, 3, 2, 2) == [17]
    assert stratum_dimension(3, 3, 2, 1) == [14]
    assert stratum_dimension(3, 4, 3, 2) == [22]
    assert stratum_dimension(3, 4, 3, 1) == [20, 18]


def test_strata_with_k_two_have_one_component():
    assert stratum_dimension(3, 4, 2, 0) == [2 * (3 + 4 - 1)]


@pytest.mark.parametrize("args", [(3, 4, 3, 0), (3, 3, 3, 2), (4, 3, 2, 1), (3, 4, 2, 3), (3, 4, 0, 0)])
def test_strata_out_of_range(args):
    with pytest.raises(OutOfRange):
        stratum_dimension(*args)


@given(st.integers(2, 6), st.integers(0, 3), st.integers(1, 6))
def test_strata_dimension_bounded_by_ambient(n2, extra, k):
    n3 = n2 + extra
    if k > n2 or (n2 == n3 and k == n2):
        return
    for s in range(max(0, k - 2), k + 1):
        for d in stratum_dimension(n2, n3, k, s):
            assert 0 < d <= 2 * n2 * n3 - 1
