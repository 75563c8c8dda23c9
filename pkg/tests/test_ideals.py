from fractions import Fraction

import pytest
import sympy
from hypothesis import HealthCheck, given, settings, strategies as st

from collineation.errors import (
    AllZeroMap,
    DegreeMismatch,
    NotHomogeneous,
    NotZeroDimensional,
    ResourceExhausted,
    RingMismatch,
)
from collineation.hilbert import HilbertData
from collineation.ideals import (
    Ideal,
    buchberger,
    dump_groebner,
    eliminate,
    groebner,
    hilbert_data,
    ideal_contains,
    ideal_equal,
    implicitize,
    intersect,
    is_fat_point,
    normal_form,
    poly_gcd,
    profile_scheme,
    saturate,
    saturate_irrelevant,
    zero_dim_radical,
)
from collineation.polyring import LEX, PolyRing, block_elim, monomials_of_degree
from collineation.scalars import GF

R = PolyRing(3)
x0, x1, x2 = R.gens()
XY = PolyRing(["x", "y"], order=LEX)
x, y = XY.gens()


def ideal(*gens, ring=R):
    return Ideal(ring, list(gens))


# -- sympy oracle ------------------------------------------------------------

def to_sympy(f, symbols):
    return sympy.Add(*[
        sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[s ** e for s, e in zip(symbols, m)])
        for m, c in f.terms.items()
    ])


def sympy_gb(polys, ring, order="grevlex"):
    symbols = sympy.symbols(ring.names)
    gb = sympy.groebner([to_sympy(p, symbols) for p in polys], *symbols, order=order, domain="QQ")
    return sorted(sympy.srepr(sympy.expand(g)) for g in gb.exprs)


def ours_as_sympy(polys, ring):
    symbols = sympy.symbols(ring.names)
    return sorted(sympy.srepr(sympy.expand(to_sympy(g, symbols))) for g in polys)


# -- groebner ----------------------------------------------------------------

def test_groebner_lex_example():
    G = groebner(ideal(x - y, x * x + y * y - 1, ring=XY), LEX)
    assert set(G.gens) == {x - y, y * y - Fraction(1, 2)}


def test_groebner_monomial_ideal_is_itself():
    G = groebner(ideal(x0 * x1, x1 * x2))
    assert set(G.gens) == {x0 * x1, x1 * x2}


def test_groebner_zero_ideal():
    assert groebner(ideal(R.zero())).gens == ()


def test_groebner_resource_cap():
    gens = [x0 ** 3 + x1 * x2 * x0 - x2 ** 3, x1 ** 3 - x0 * x2 * x2 + x1 * x0 * x0, x2 ** 3 + x0 * x1 * x1 - x0 ** 3]
    with pytest.raises(ResourceExhausted):
        buchberger(gens, R, max_pairs=1)


def test_dump_is_sorted_by_lead_monomial():
    text = dump_groebner(ideal(x1 * x2, x0 * x1, x0 ** 2))
    assert text.splitlines() == ["x1*x2", "x0*x1", "x0^2"]


coef = st.integers(min_value=-3, max_value=3).map(Fraction)


@st.composite
def quadric_ideals(draw, ring=R, max_gens=3):
    monos = monomials_of_degree(ring.nvars, 2)
    gens = []
    for _ in range(draw(st.integers(1, max_gens))):
        support = draw(st.lists(st.sampled_from(monos), min_size=1, max_size=3, unique=True))
        gens.append(ring.from_dict({m: draw(coef) for m in support}))
    return Ideal(ring, gens)


@given(quadric_ideals())
@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_groebner_matches_sympy(I):
    if I.is_zero():
        return
    assert ours_as_sympy(I.gb(), R) == sympy_gb(I.gens, R)


@given(quadric_ideals())
@settings(max_examples=40, deadline=None)
def test_groebner_is_idempotent_and_reduces_generators(I):
    G = groebner(I)
    assert groebner(G).gens == G.gens
    assert all(not normal_form(g, G) for g in I.gens)


# -- normal forms and ideal comparison ---------------------------------------

def test_normal_form_examples():
    assert normal_form(x0 * x0, [x0]).is_zero()
    assert normal_form(x1, [x0]) == x1
    assert normal_form(x0 * x1 * x2, ideal(x0 * x1, x1 * x2)).is_zero()


def test_normal_form_ring_mismatch():
    with pytest.raises(RingMismatch):
        normal_form(x, ideal(x0))


def test_containment_and_equality():
    xy = PolyRing(["x", "y"])
    a, b = xy.gens()
    assert ideal_contains(ideal(a, ring=xy), ideal(a * a, a * b, ring=xy))
    assert not ideal_equal(ideal(a, ring=xy), ideal(a * a, a * b, ring=xy))
    I = ideal(x0 * x1 - x2 * x2, x0 + x1)
    assert ideal_equal(I, groebner(I))


# -- elimination and saturation ----------------------------------------------

def test_eliminate_example():
    ring = PolyRing(["t", "x", "y"], order=block_elim(1))
    t, a, b = ring.gens()
    J = eliminate(Ideal(ring, [t * a - 1, t * b]), 1)
    assert J.ring.names == ("x", "y")
    assert list(J.gens) == [J.ring.gen(1)]


def test_eliminate_zero_ideal():
    ring = PolyRing(["t", "x"], order=block_elim(1))
    assert eliminate(Ideal(ring, []), 1).is_zero()


def test_veronese_kernel_by_elimination():
    src = PolyRing(["u0", "u1", "u2"])
    u = src.gens()
    pairs = [(i, j) for i in range(3) for j in range(i, 3)]
    image = implicitize([u[i] * u[j] for i, j in pairs])
    z = image.ideal.ring.gens()
    z_of = {p: z[n] for n, p in enumerate(pairs)}
    sym = lambda i, j: z_of[(min(i, j), max(i, j))]
    # all 2x2 minors of the symmetric matrix (z_ij) lie in the image ideal
    for r in ((0, 1), (0, 2), (1, 2)):
        for c in ((0, 1), (0, 2), (1, 2)):
            minor = sym(r[0], c[0]) * sym(r[1], c[1]) - sym(r[0], c[1]) * sym(r[1], c[0])
            assert minor in image.ideal
    assert len([g for g in image.ideal.gens if g.degree() == 2]) == 6


def test_saturate_examples():
    assert set(saturate(ideal(x0 * x0 * x1), x0).gens) == {x1}
    assert set(saturate(ideal(x0 * x1, x0 * x2), x0).gens) == {x1, x2}
    I = ideal(x0 * x1 - x2 * x2, x1 ** 3)
    assert saturate(I, R.one()).gens == groebner(I).gens


def test_saturate_irrelevant_examples():
    xy = PolyRing(2)
    a, b = xy.gens()
    assert set(saturate_irrelevant(ideal(a * a, a * b, ring=xy)).gens) == {a}
    three = ideal(x0 * x1, x0 * x2, x1 * x2)
    assert ideal_equal(saturate_irrelevant(three), three)
    assert set(saturate_irrelevant(ideal(a * a, ring=xy)).gens) == {a * a}


def test_saturate_irrelevant_needs_homogeneous():
    with pytest.raises(NotHomogeneous):
        saturate_irrelevant(ideal(x0 - 1))


def bayer_saturation(I, i):
    """Saturation by ``x_i`` via a grevlex basis with ``x_i`` last, computed by sympy."""
    names = list(R.names)
    order = [n for k, n in enumerate(names) if k != i] + [names[i]]
    symbols = sympy.symbols(names)
    sym_order = [symbols[names.index(n)] for n in order]
    gb = sympy.groebner([to_sympy(g, symbols) for g in I.gens], *sym_order, order="grevlex", domain="QQ")
    last = sym_order[-1]
    out = []
    for g in gb.exprs:
        p = sympy.Poly(g, last)
        k = min(m[0] for m in p.monoms())
        out.append(sympy.expand(g / last ** k))
    return sorted(sympy.srepr(e) for e in sympy.groebner(out, *symbols, order="grevlex", domain="QQ").exprs)


@given(quadric_ideals(), st.integers(0, 2))
@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_saturation_matches_bayer_oracle(I, i):
    if I.is_zero() or not I.is_homogeneous():
        return
    ours = saturate(I, R.gen(i))
    if ours.is_unit():
        assert bayer_saturation(I, i) == [sympy.srepr(sympy.Integer(1))]
        return
    assert ours_as_sympy(ours.gb(), R) == bayer_saturation(I, i)


@given(quadric_ideals(), quadric_ideals())
@settings(max_examples=20, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_intersection_properties(I, J):
    if I.is_zero() or J.is_zero():
        return
    K = intersect(I, J)
    assert ideal_contains(I, K) and ideal_contains(J, K)
    assert ideal_contains(K, I * J)


def test_poly_gcd():
    f = (x0 + x1) * (x0 - x2)
    g = (x0 + x1) * x2
    assert poly_gcd(f, g) == x0 + x1
    assert poly_gcd(x0, x1) == R.one()


# -- Hilbert data ------------------------------------------------------------

def test_hilbert_examples():
    assert hilbert_data(ideal(x0 * x1, x0 * x2, x1 * x2)) == HilbertData(0, 3)
    assert hilbert_data(ideal(x1 * x1, x1 * x2, x2 * x2)) == HilbertData(0, 3)
    assert hilbert_data(ideal()) == HilbertData(2, 1)
    assert hilbert_data(ideal(x0, x1, x2)) == HilbertData(-1, 0)
    assert hilbert_data(ideal(x0 * x1 * x2 + x0 ** 3)) == HilbertData(1, 3)


def test_hilbert_needs_homogeneous():
    with pytest.raises(NotHomogeneous):
        hilbert_data(ideal(x0 - 1))


@given(quadric_ideals())
@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_saturation_keeps_dimension_and_degree(I):
    if I.is_zero():
        return
    before, after = hilbert_data(I), hilbert_data(saturate_irrelevant(I))
    if before.dim >= 0:
        assert before == after


# -- radicals ----------------------------------------------------------------

def test_radical_examples():
    assert set(zero_dim_radical(ideal(x1 * x1, x2)).gens) == {x1, x2}
    assert set(zero_dim_radical(ideal(x1 * x1, x1 * x2, x2 * x2)).gens) == {x1, x2}
    three = ideal(x0 * x1, x0 * x2, x1 * x2)
    assert ideal_equal(zero_dim_radical(three), three)


def test_radical_rejects_curves():
    with pytest.raises(NotZeroDimensional):
        zero_dim_radical(ideal(x0 * x1))


def point_ideal(p):
    """Ideal of the point ``p`` in P^2 (two linear forms)."""
    a, b, c = (Fraction(v) for v in p)
    if a:
        return ideal(x1.scale(a) - x0.scale(b), x2.scale(a) - x0.scale(c))
    if b:
        return ideal(x0, x2.scale(b) - x1.scale(c))
    return ideal(x0, x1)


points = st.tuples(*[st.integers(-2, 2)] * 3).filter(lambda p: p != (0, 0, 0))


def _normalized(p):
    lead = next(v for v in p if v)
    return tuple(Fraction(v, lead) for v in p)


@given(st.lists(points, min_size=1, max_size=3), st.lists(st.booleans(), min_size=3, max_size=3))
@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_radical_properties_on_fat_point_configurations(pts, fat):
    distinct = list(dict.fromkeys(_normalized(p) for p in pts))
    I = None
    for p, f in zip(distinct, fat):
        P = point_ideal(p)
        P = P * P if f else P
        I = P if I is None else intersect(I, P)
    I = saturate_irrelevant(I)
    rad = zero_dim_radical(I)
    assert ideal_contains(rad, I)
    assert ideal_equal(zero_dim_radical(rad), rad)
    assert hilbert_data(rad).degree == len(distinct) <= hilbert_data(I).degree


def test_radical_is_seed_independent():
    I = saturate_irrelevant(ideal(x1 * x1, x1 * x2, x2 * x2) * ideal(x0, x1))
    assert ideal_equal(zero_dim_radical(I, seed=0), zero_dim_radical(I, seed=7))


def test_radical_over_gf():
    ring = PolyRing(3, GF())
    a, b, c = ring.gens()
    rad = zero_dim_radical(Ideal(ring, [b * b, b * c, c * c]))
    assert set(rad.gens) == {b, c}


# -- scheme profiles ---------------------------------------------------------

def test_profiles():
    five = ideal(x0 * x1, x0 * x2, x1 * x1, x1 * x2, x2 * x2)
    assert profile_scheme(saturate_irrelevant(five))[0].as_dict() == {"dim": 0, "deg": 1, "radical_deg": 1, "local_type": "reduced"}
    four = ideal(x1 * x1, x0 * x2, x1 * x2, x2 * x2)
    assert profile_scheme(saturate_irrelevant(four))[0].as_dict() == {"dim": 0, "deg": 2, "radical_deg": 1, "local_type": "curvilinear"}
    fat = ideal(x1 * x1, x1 * x2, x2 * x2)
    assert profile_scheme(fat)[0].local_type == "fat_point"
    curvilinear3 = ideal(x0 * x2 - x1 * x1, x1 ** 3, x1 * x2, x2 * x2)
    prof = profile_scheme(saturate_irrelevant(curvilinear3))[0]
    assert (prof.deg, prof.radical_deg, prof.local_type) == (3, 1, "curvilinear")


def test_fat_point_test_is_an_ideal_test():
    fat = ideal(x1 * x1, x1 * x2, x2 * x2)
    rad = ideal(x1, x2)
    assert is_fat_point(fat, rad)
    curv = saturate_irrelevant(ideal(x0 * x2 - x1 * x1, x1 ** 3, x1 * x2, x2 * x2))
    assert not is_fat_point(curv, zero_dim_radical(curv))


# -- implicitization ---------------------------------------------------------

def test_implicitize_cremona():
    img = implicitize([x1 * x2, x0 * x2, x0 * x1])
    assert img.ideal.is_zero()
    assert img.hilbert == HilbertData(2, 1) and img.span_dim == 3


def test_implicitize_veronese():
    img = implicitize([R.monomial(m) for m in monomials_of_degree(3, 2)])
    assert img.hilbert == HilbertData(2, 4) and img.span_dim == 6


def test_implicitize_quadrics_through_a_point():
    img = implicitize([x0 * x1, x0 * x2, x1 * x1, x1 * x2, x2 * x2])
    assert img.hilbert == HilbertData(2, 3) and img.span_dim == 5


def test_implicitize_counts_linear_relations():
    img = implicitize([x0 * x0, x0 * x1, x0 * x0 + x0 * x1])
    assert img.span_dim == 2


def test_implicitize_errors():
    with pytest.raises(AllZeroMap):
        implicitize([R.zero(), R.zero()])
    with pytest.raises(DegreeMismatch):
        implicitize([x0, x1 * x1])
