"""Gröbner bases and the ideal operations built on them.

Buchberger's algorithm uses the Gebauer-Möller installation of the product
and chain criteria with sugar-degree pair selection. Elimination, saturation
and intersection are all done through block elimination orders; saturation by
``f`` adjoins ``t*f - 1`` and eliminates ``t``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    AllZeroMap,
    ArityMismatch,
    DegreeMismatch,
    NotHomogeneous,
    NotZeroDimensional,
    ResourceExhausted,
    RingMismatch,
)
from .hilbert import HilbertData, hilbert_data_of_monomials
from .linalg import rref
from .polyring import (
    GREVLEX,
    MonomialOrder,
    Poly,
    PolyRing,
    block_elim,
    divide_exact,
    mono_div,
    mono_divides,
    mono_lcm,
    monomials_of_degree,
    usquarefree,
)

DEFAULT_MAX_PAIRS = 500_000


class Ideal:
    """An ideal given by generators in one polynomial ring.

    Reduced Gröbner bases are cached per monomial order on first request.
    """

    def __init__(self, ring: PolyRing, gens: Iterable[Poly] = ()):
        self.ring = ring
        clean = []
        for g in gens:
            if not g.ring.compatible(ring):
                raise RingMismatch(f"generator {g} is not in {ring!r}")
            if g:
                clean.append(g if g.ring == ring else g.with_ring(ring))
        self.gens = tuple(clean)
        self._gb: dict = {}

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.gens]})"

    def is_zero(self) -> bool:
        return not self.gens

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def gb(self, order: Optional[MonomialOrder] = None) -> list:
        """Reduced Gröbner basis as a list of polynomials, ascending by leading monomial."""
        order = order or self.ring.order
        if order not in self._gb:
            ring = self.ring.with_order(order)
            self._gb[order] = buchberger([g.with_ring(ring) for g in self.gens], ring)
        return self._gb[order]

    def is_unit(self) -> bool:
        g = self.gb()
        return len(g) == 1 and g[0].is_constant()

    def __add__(self, other: "Ideal") -> "Ideal":
        _check_rings(self, other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "Ideal") -> "Ideal":
        _check_rings(self, other)
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def __pow__(self, e: int) -> "Ideal":
        out = Ideal(self.ring, [self.ring.one()])
        for _ in range(e):
            out = out * self
        return out

    def __contains__(self, f: Poly) -> bool:
        return not normal_form(f, self)

    def with_order(self, order: MonomialOrder) -> "Ideal":
        ring = self.ring.with_order(order)
        out = Ideal(ring, [g.with_ring(ring) for g in self.gens])
        out._gb = self._gb
        return out


def _check_rings(a: Ideal, b: Ideal):
    if not a.ring.compatible(b.ring):
        raise RingMismatch(f"{a.ring!r} vs {b.ring!r}")


# -- Buchberger ----------------------------------------------------------

def _reduce_terms(terms: dict, basis: Sequence[Poly], key) -> dict:
    """Fully reduce a term dict modulo monic polynomials ``basis``."""
    p = dict(terms)
    r = {}
    lms = [(g.lm(), g) for g in basis]
    while p:
        m = max(p, key=key)
        c = p.pop(m)
        for glm, g in lms:
            if mono_divides(glm, m):
                q = mono_div(m, glm)
                get = p.get
                for gm, gc in g.terms.items():
                    if gm == glm:
                        continue
                    mm = tuple([a + b for a, b in zip(gm, q)])
                    v = get(mm)
                    if v is None:
                        p[mm] = -c * gc
                    else:
                        v = v - c * gc
                        if v:
                            p[mm] = v
                        else:
                            del p[mm]
                break
        else:
            r[m] = c
    return r


def _linear_interreduce(polys: list, ring: PolyRing) -> list:
    """Gaussian elimination on the coefficient matrix, columns in descending term order."""
    if len(polys) <= 1:
        return [p.monic() for p in polys]
    key = ring.order.key
    monos = sorted({m for p in polys for m in p.terms}, key=key, reverse=True)
    col = {m: i for i, m in enumerate(monos)}
    zero = ring.field.zero
    rows = []
    for p in polys:
        row = [zero] * len(monos)
        for m, c in p.terms.items():
            row[col[m]] = c
        rows.append(row)
    reduced, _ = rref(rows)
    return [Poly(ring, {monos[i]: c for i, c in enumerate(row) if c}) for row in reduced]


def buchberger(polys: Sequence[Poly], ring: PolyRing, max_pairs: int = DEFAULT_MAX_PAIRS) -> list:
    """Reduced Gröbner basis of the ideal generated by ``polys`` in ``ring``'s order."""
    key = ring.order.key
    polys = [p for p in polys if p]
    if not polys:
        return []
    if any(p.is_constant() for p in polys):
        return [ring.one()]
    polys = _linear_interreduce(polys, ring)
    polys.sort(key=lambda p: key(p.lm()))

    basis: list = []  # every polynomial ever added, monic
    sugar: list = []
    active: list = []  # indices into basis forming the current minimal set
    pairs: list = []  # (sugar, lcm key, i, j, lcm)

    def add(h: Poly, s: int):
        nonlocal pairs, active
        hi = len(basis)
        basis.append(h)
        sugar.append(s)
        hlm = h.lm()
        hdeg = sum(hlm)
        cand = []
        for gi in active:
            glm = basis[gi].lm()
            cand.append((gi, mono_lcm(glm, hlm), _coprime(glm, hlm)))
        kept = []
        for idx, (gi, lcm, coprime) in enumerate(cand):
            if coprime:
                kept.append((gi, lcm, coprime))
                continue
            redundant = False
            for gj, lcm2, _ in itertools.chain(cand[idx + 1:], kept):
                if mono_divides(lcm2, lcm):
                    redundant = True
                    break
            if not redundant:
                kept.append((gi, lcm, coprime))
        new_pairs = []
        for gi, lcm, coprime in kept:
            if coprime:
                continue
            glm = basis[gi].lm()
            ldeg = sum(lcm)
            ps = max(sugar[gi] + ldeg - sum(glm), s + ldeg - hdeg)
            new_pairs.append((ps, key(lcm), gi, hi, lcm))
        survivors = []
        for pr in pairs:
            _, _, i, j, lcm = pr
            if mono_divides(hlm, lcm):
                li = mono_lcm(basis[i].lm(), hlm)
                lj = mono_lcm(basis[j].lm(), hlm)
                if li != lcm and lj != lcm:
                    continue
            survivors.append(pr)
        pairs = survivors + new_pairs
        active = [gi for gi in active if not mono_divides(hlm, basis[gi].lm())] + [hi]

    for f in polys:
        cur = [basis[i] for i in active]
        h = Poly(ring, _reduce_terms(f.terms, cur, key)) if cur else f
        if h:
            if h.is_constant():
                return [ring.one()]
            add(h.monic(), h.degree())

    processed = 0
    while pairs:
        best = min(range(len(pairs)), key=lambda t: (pairs[t][0], pairs[t][1]))
        s, _, i, j, lcm = pairs.pop(best)
        processed += 1
        if processed > max_pairs:
            raise ResourceExhausted(f"more than {max_pairs} critical pairs")
        f, g = basis[i], basis[j]
        spoly = _spoly(f, g, lcm)
        if not spoly:
            continue
        cur = [basis[k] for k in active]
        h = _reduce_terms(spoly, cur, key)
        if h:
            hp = Poly(ring, h)
            if hp.is_constant():
                return [ring.one()]
            add(hp.monic(), s)

    minimal = [basis[i] for i in active]
    out = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        glm = g.lm()
        tail = {m: c for m, c in g.terms.items() if m != glm}
        red = _reduce_terms(tail, others, key)
        red[glm] = g.terms[glm]
        out.append(Poly(ring, red))
    out.sort(key=lambda p: key(p.lm()))
    return out


def _coprime(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _spoly(f: Poly, g: Poly, lcm: tuple) -> dict:
    """S-polynomial of two monic polynomials as a term dict."""
    uf = mono_div(lcm, f.lm())
    ug = mono_div(lcm, g.lm())
    out: dict = {}
    for m, c in f.terms.items():
        out[tuple([a + b for a, b in zip(m, uf)])] = c
    for m, c in g.terms.items():
        mm = tuple([a + b for a, b in zip(m, ug)])
        v = out.get(mm)
        if v is None:
            out[mm] = -c
        else:
            v = v - c
            if v:
                out[mm] = v
            else:
                del out[mm]
    return out


def groebner(I: Ideal, order: Optional[MonomialOrder] = None) -> Ideal:
    """The reduced Gröbner basis of ``I`` as an ideal in the ring with ``order``."""
    order = order or I.ring.order
    ring = I.ring.with_order(order)
    out = Ideal(ring, I.gb(order))
    out._gb[order] = list(out.gens)
    return out


def normal_form(f: Poly, G) -> Poly:
    """Remainder of ``f`` modulo an ideal (its reduced GB is used) or a GB list."""
    if isinstance(G, Ideal):
        if not f.ring.compatible(G.ring):
            raise RingMismatch(f"{f.ring!r} vs {G.ring!r}")
        basis = G.gb()
        ring = G.ring
    else:
        basis = list(G)
        ring = basis[0].ring if basis else f.ring
        if not f.ring.compatible(ring):
            raise RingMismatch(f"{f.ring!r} vs {ring!r}")
    if not basis:
        return f.with_ring(ring)
    return Poly(ring, _reduce_terms(f.terms, [b.monic() for b in basis], ring.order.key))


def dump_groebner(I: Ideal, order: Optional[MonomialOrder] = None) -> str:
    """One generator per line, ascending by leading monomial."""
    return "\n".join(str(g) for g in I.gb(order))


# -- membership ----------------------------------------------------------

def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """True when ``J`` is contained in ``I``."""
    _check_rings(I, J)
    return all(not normal_form(g, I) for g in J.gens)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    _check_rings(I, J)
    a = [g.terms for g in I.gb(GREVLEX)]
    b = [g.terms for g in J.gb(GREVLEX)]
    return a == b


# -- elimination, saturation, intersection ---------------------------------

def eliminate(I: Ideal, drop_count: int) -> Ideal:
    """``I`` intersected with the subring of the last ``nvars - drop_count`` variables."""
    ring = I.ring
    if not 0 <= drop_count < ring.nvars:
        raise ArityMismatch(f"cannot drop {drop_count} of {ring.nvars} variables")
    sub = PolyRing(ring.names[drop_count:], ring.field, GREVLEX)
    if drop_count == 0:
        return Ideal(sub, [g.with_ring(sub) for g in I.gens])
    gb = I.gb(block_elim(drop_count))
    keep = []
    for g in gb:
        if all(not any(m[:drop_count]) for m in g.terms):
            keep.append(Poly(sub, {m[drop_count:]: c for m, c in g.terms.items()}))
    return Ideal(sub, keep)


def _fresh_name(ring: PolyRing, base: str = "t") -> str:
    name = "_" + base
    while name in ring.names:
        name = "_" + name
    return name


def _extend(ring: PolyRing, name: str) -> PolyRing:
    return PolyRing((name,) + ring.names, ring.field, block_elim(1))


def _back(J: Ideal, ring: PolyRing) -> Ideal:
    out = Ideal(ring, [g.with_ring(ring.with_order(J.ring.order)) for g in J.gens])
    return Ideal(ring, out.gb(ring.order))


def saturate(I: Ideal, f: Poly) -> Ideal:
    """``I : f^infinity`` via the extra variable ``t`` with ``t*f - 1``."""
    ring = I.ring
    if not f:
        raise ValueError("cannot saturate by zero")
    if f.is_constant() or not I.gens:
        return Ideal(ring, I.gb())
    ext = _extend(ring, _fresh_name(ring))
    shift = list(range(1, ring.nvars + 1))
    t = ext.gen(0)
    gens = [g.embed(ext, shift) for g in I.gens]
    gens.append(t * f.embed(ext, shift) - 1)
    return _back(eliminate(Ideal(ext, gens), 1), ring)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` by eliminating ``t`` from ``t*I + (1 - t)*J``."""
    _check_rings(I, J)
    ring = I.ring
    if not I.gens or not J.gens:
        return Ideal(ring, [])
    if I.is_unit():
        return Ideal(ring, J.gb())
    if J.is_unit():
        return Ideal(ring, I.gb())
    ext = _extend(ring, _fresh_name(ring))
    shift = list(range(1, ring.nvars + 1))
    t = ext.gen(0)
    gens = [t * g.embed(ext, shift) for g in I.gens]
    gens += [(1 - t) * g.embed(ext, shift) for g in J.gens]
    return _back(eliminate(Ideal(ext, gens), 1), ring)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd of two polynomials, as ``f * g / lcm`` with ``(lcm) = (f) ∩ (g)``."""
    ring = f.ring
    if not f:
        return g.monic() if g else ring.zero()
    if not g:
        return f.monic()
    if f.is_constant() or g.is_constant():
        return ring.one()
    lcm = intersect(Ideal(ring, [f]), Ideal(ring, [g])).gens
    if len(lcm) != 1:
        raise ArithmeticError("intersection of principal ideals is not principal")
    return divide_exact(f * g, lcm[0]).monic()


def saturate_irrelevant(I: Ideal) -> Ideal:
    """``I : m^infinity`` for the irrelevant ideal ``m = (x0, ..., xn)``.

    Computed as the intersection of the saturations by each variable.
    """
    if not I.is_homogeneous():
        raise NotHomogeneous("saturation by the irrelevant ideal needs a homogeneous ideal")
    ring = I.ring
    if not I.gens:
        return Ideal(ring, [])
    out = None
    for x in ring.gens():
        s = saturate(I, x)
        out = s if out is None else intersect(out, s)
    return out


# -- Hilbert data ----------------------------------------------------------

def hilbert_data(I: Ideal) -> HilbertData:
    """Projective dimension and degree of the scheme cut out by homogeneous ``I``."""
    if not I.is_homogeneous():
        raise NotHomogeneous("Hilbert data needs a homogeneous ideal")
    lead = [g.lm() for g in I.gb(GREVLEX)]
    return hilbert_data_of_monomials(lead, I.ring.nvars)


# -- radicals of zero-dimensional ideals -----------------------------------

def chart_forms(nvars: int, seed: int = 0):
    """Deterministic candidate linear forms: subset sums, then seeded random ones."""
    for size in range(1, nvars + 1):
        for subset in itertools.combinations(range(nvars), size):
            yield tuple(1 if i in subset else 0 for i in range(nvars))
    rng = random.Random(seed)
    while True:
        yield tuple(rng.randint(-50, 50) for _ in range(nvars))


def _dehomogenize(I: Ideal, coeffs: tuple, j: int) -> tuple:
    """Restrict to the chart ``l = 1`` where ``l = sum c_i x_i`` and ``c_j != 0``.

    Returns the affine ideal in the other variables.
    """
    ring = I.ring
    others = [i for i in range(ring.nvars) if i != j]
    aff = PolyRing([ring.names[i] for i in others], ring.field, GREVLEX)
    field = ring.field
    cj = field(coeffs[j])
    images = [None] * ring.nvars
    ag = aff.gens()
    for pos, i in enumerate(others):
        images[i] = ag[pos]
    # x_j = (1 - sum_{i != j} c_i x_i) / c_j
    xj = aff.one()
    for pos, i in enumerate(others):
        if coeffs[i]:
            xj = xj - ag[pos].scale(coeffs[i])
    images[j] = xj.scale(1 / cj)
    return Ideal(aff, [g.compose(images) for g in I.gens]), others


def _homogenize(f: Poly, target: PolyRing, j: int, others: list) -> Poly:
    d = f.degree()
    terms = {}
    for m, c in f.terms.items():
        e = [0] * target.nvars
        for pos, i in enumerate(others):
            e[i] = m[pos]
        e[j] = d - sum(m)
        terms[tuple(e)] = c
    return Poly(target, terms)


def zero_dim_radical(I: Ideal, seed: int = 0) -> Ideal:
    """Radical of a saturated homogeneous ideal defining finitely many points."""
    if not I.is_homogeneous():
        raise NotHomogeneous("radical needs a homogeneous ideal")
    ring = I.ring
    hd = hilbert_data(I)
    if hd.dim == -1:
        return Ideal(ring, [ring.one()])
    if hd.dim != 0:
        raise NotZeroDimensional(f"scheme has dimension {hd.dim}")
    field = ring.field
    for coeffs in chart_forms(ring.nvars, seed):
        ell = ring.linear_form(coeffs)
        if hilbert_data(I + Ideal(ring, [ell])).dim == -1:
            break
    j = next(i for i, c in enumerate(coeffs) if c)
    aff_ideal, others = _dehomogenize(I, coeffs, j)
    aff = aff_ideal.ring
    extra = []
    n = aff.nvars
    for v in range(n):
        # minimal polynomial of variable v: eliminate the others
        perm = [p for p in range(n) if p != v] + [v]
        pring = PolyRing([aff.names[p] for p in perm], field, GREVLEX)
        pos = [perm.index(p) for p in range(n)]
        moved = Ideal(pring, [g.embed(pring, pos) for g in aff_ideal.gens])
        elim = eliminate(moved, n - 1) if n > 1 else moved
        uni = [g for g in elim.gb()]
        assert len(uni) == 1, "zero-dimensional ideal must have a univariate eliminant"
        u = uni[0]
        coeff_list = [field.zero] * (u.degree() + 1)
        for m, c in u.terms.items():
            coeff_list[m[0]] = c
        sq = usquarefree(coeff_list)
        e = [0] * n
        terms = {}
        for k, c in enumerate(sq):
            if c:
                e = [0] * n
                e[v] = k
                terms[tuple(e)] = c
        extra.append(Poly(aff, terms))
    rad_aff = Ideal(aff, list(aff_ideal.gens) + extra)
    gb = rad_aff.gb(GREVLEX)
    # homogenize in the coordinates y_j = l, y_i = x_i, then substitute back
    hom = [_homogenize(g, ring, j, others) for g in gb]
    back = list(ring.gens())
    back[j] = ell
    homog = Ideal(ring, [h.compose(back) for h in hom])
    return saturate_irrelevant(homog)



# -- implicitization -------------------------------------------------------

@dataclass(frozen=True)
class ImageData:
    """Closure of the image of a map given by forms of one degree."""

    ideal: Ideal
    hilbert: HilbertData
    span_dim: int


def implicitize(maps: Sequence[Poly], source_dim: Optional[int] = None) -> ImageData:
    """Image of ``P^n -> P^m, x -> (f_0(x) : ... : f_m(x))`` by elimination.

    The target variables ``z_i`` get weight ``deg f_i`` so ``z_i - f_i`` is
    weighted-homogeneous; the block order eliminates the source variables.
    ``span_dim`` is ``m + 1`` minus the number of independent linear forms
    vanishing on the image.
    """
    maps = list(maps)
    if not maps:
        raise AllZeroMap("empty map")
    ring = maps[0].ring
    for f in maps:
        if not f.ring.compatible(ring):
            raise RingMismatch("map components live in different rings")
    if source_dim is not None and source_dim != ring.nvars - 1:
        raise ArityMismatch(f"source P^{source_dim} needs {source_dim + 1} variables, ring has {ring.nvars}")
    nonzero = [f for f in maps if f]
    if not nonzero:
        raise AllZeroMap("every component of the map vanishes")
    degrees = {f.degree() for f in nonzero}
    if len(degrees) != 1 or not all(f.is_homogeneous() for f in nonzero):
        raise DegreeMismatch(f"components must be forms of one degree, got degrees {sorted(degrees)}")
    n = ring.nvars
    znames = [f"z{i}" for i in range(len(maps))]
    ext = PolyRing(ring.names + tuple(znames), ring.field, block_elim(n))
    src = list(range(n))
    zs = ext.gens()[n:]
    gens = [z - f.embed(ext, src) for z, f in zip(zs, maps)]
    image = eliminate(Ideal(ext, gens), n)
    image = Ideal(image.ring, image.gb(GREVLEX))
    linear = sum(1 for g in image.gens if g.degree() == 1)
    return ImageData(image, hilbert_data(image), len(maps) - linear)


# -- scheme profiles ---------------------------------------------------------

@dataclass(frozen=True)
class SchemeProfile:
    """Numerical type of a projective scheme ``B``.

    ``local_type`` is one of empty, reduced, curvilinear, fat_point, mixed for
    finite schemes and ``None`` when ``B`` has positive dimension.
    """

    dim: int
    deg: int
    radical_deg: Optional[int]
    local_type: Optional[str]

    def as_dict(self) -> dict:
        return {"dim": self.dim, "deg": self.deg, "radical_deg": self.radical_deg, "local_type": self.local_type}


def profile_scheme(I_sat: Ideal) -> tuple:
    """Profile of the scheme of a saturated homogeneous ideal.

    Returns ``(profile, radical)`` where ``radical`` is ``None`` unless the
    scheme is finite and nonempty.
    """
    hd = hilbert_data(I_sat)
    if hd.dim == -1:
        return SchemeProfile(-1, 0, 0, "empty"), None
    if hd.dim > 0:
        return SchemeProfile(hd.dim, hd.degree, None, None), None
    rad = zero_dim_radical(I_sat)
    rdeg = hilbert_data(rad).degree
    deg = hd.degree
    if rdeg == deg:
        kind = "reduced"
    elif rdeg == 1 and deg == 3 and I_sat.ring.nvars == 3 and is_fat_point(I_sat, rad):
        kind = "fat_point"
    elif rdeg == 1 and (deg <= 3 or I_sat.ring.nvars == 2):
        kind = "curvilinear"
    else:
        kind = "mixed"
    return SchemeProfile(0, deg, rdeg, kind), rad


def is_fat_point(I_sat: Ideal, rad: Ideal) -> bool:
    """Is the scheme the first infinitesimal neighbourhood ``I(p)^2`` of a point?"""
    return ideal_equal(I_sat, rad * rad)


def graded_piece_dim(gens: Sequence[Poly], degree: int) -> int:
    """Dimension of the degree-``degree`` part of the ideal generated by homogeneous ``gens``."""
    return len(graded_piece_basis(gens, degree))


def graded_piece_basis(gens: Sequence[Poly], degree: int) -> list:
    """Row-reduced basis (coefficient rows over the degree monomials) of ``(gens)_degree``."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = gens[0].ring
    monos = monomials_of_degree(ring.nvars, degree)
    col = {m: i for i, m in enumerate(monos)}
    zero = ring.field.zero
    rows = []
    for g in gens:
        if not g.is_homogeneous():
            raise NotHomogeneous(f"{g} is not homogeneous")
        d = g.degree()
        if d > degree:
            continue
        for mult in monomials_of_degree(ring.nvars, degree - d):
            row = [zero] * len(monos)
            for m, c in g.terms.items():
                row[col[tuple(a + b for a, b in zip(m, mult))]] = c
            rows.append(row)
    return rref(rows)[0]
