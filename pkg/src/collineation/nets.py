"""Nets of matrices (``n = 3`` on the chosen factor) and their quadric systems.

The 2x2 minors of a net's linear-form matrix are ternary quadrics spanning a
linear system ``L``. Its base scheme ``B`` decides the collineation variety
when ``dim L = 6 - deg B``; otherwise the image is found by implicitization.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional

from .errors import UndefinedCollineation, WrongDims
from .ideals import (
    Ideal,
    ImageData,
    SchemeProfile,
    implicitize,
    poly_gcd,
    profile_scheme,
    saturate_irrelevant,
)
from .labels import CollineationLabel, rnc
from .linalg import rank
from .polyring import Poly, PolyRing, divide_exact
from .scalars import QQ, Field
from .tensors import (
    LinearFormMatrix,
    Tensor3,
    _concise_or_warn,
    linear_matrix,
    minors,
    span_basis,
    strassen_flattening,
    tensor_from_linear_matrix,
)

SIGMA3_MAX_RANK = 7


@dataclass(frozen=True)
class NetClassification:
    """Outcome of :func:`classify_net`; ``path`` names the branch that decided it."""

    label: CollineationLabel
    profile: SchemeProfile
    dimL: int
    path: str
    image: Optional[ImageData] = dc_field(default=None, compare=False)

    def __iter__(self):
        return iter((self.label, self.profile, self.dimL))

    def report(self) -> dict:
        out = {
            "label": self.label.name,
            "span": self.label.span,
            "base_locus": self.profile.as_dict(),
            "dimL": self.dimL,
            "path": self.path,
        }
        if self.path == "oracle" and self.image is not None:
            out["oracle"] = {"dim": self.image.hilbert.dim, "deg": self.image.hilbert.degree, "span": self.image.span_dim}
        return out


def quadric_system(T: Tensor3, factor: int = 1) -> tuple:
    """``(all 2x2 minors, basis of their span)`` for a net on ``factor``."""
    core = _concise_or_warn(T)
    if core.dims[factor - 1] != 3:
        raise WrongDims(f"factor {factor} has dimension {core.dims[factor - 1]} after reduction, a net needs 3")
    M = linear_matrix(core, factor)
    if min(M.shape) < 2:
        raise UndefinedCollineation("the matrix has no 2x2 minors")
    ms = minors(M, 2)
    basis = span_basis(ms)
    if not basis:
        raise UndefinedCollineation("all 2x2 minors vanish")
    return ms, basis


def profile_base_scheme(L) -> SchemeProfile:
    """Profile of the scheme cut out by the quadrics ``L``."""
    L = [q for q in L if q]
    if not L:
        raise UndefinedCollineation("empty linear system")
    sat = saturate_irrelevant(Ideal(L[0].ring, L))
    return profile_scheme(sat)[0]


def common_factor(polys) -> Poly:
    g = polys[0]
    for p in polys[1:]:
        g = poly_gcd(g, p)
        if g.is_constant():
            break
    return g.monic()


_BY_SPAN = {3: "Plane", 2: "Line", 1: "Point"}


def lemma_label(profile: SchemeProfile) -> CollineationLabel:
    """Variety of a quadric system with ``dim L = 6 - deg B`` and finite base scheme."""
    deg = profile.deg
    if deg == 0:
        return CollineationLabel("Veronese")
    if deg == 1:
        return CollineationLabel("Scroll_1_2")
    if deg == 2:
        return CollineationLabel("QuadricSurface" if profile.local_type == "reduced" else "QuadricCone")
    if deg == 3:
        return CollineationLabel("Conic" if profile.local_type == "fat_point" else "Plane")
    if deg == 4:
        return CollineationLabel("Line")
    raise ValueError(f"no linear system of quadrics with dim L = {6 - deg}")


def quadric_rank(q) -> int:
    """Rank of the symmetric matrix of a quadratic form (characteristic not 2)."""
    n = q.ring.nvars
    field = q.ring.field
    half = field.one / (field.one + field.one)
    mat = [[field.zero] * n for _ in range(n)]
    for m, c in q.terms.items():
        idx = [i for i, e in enumerate(m) for _ in range(e)]
        i, j = idx
        if i == j:
            mat[i][i] = c
        else:
            mat[i][j] = c * half
            mat[j][i] = c * half
    return rank(mat)


def label_from_image(image: ImageData) -> CollineationLabel:
    """Name the image variety from its numerical type ``(dim, degree, span)``."""
    dim, deg, span = image.hilbert.dim, image.hilbert.degree, image.span_dim
    if dim == 0:
        return CollineationLabel("Point")
    if dim == 1:
        if deg == 1:
            return CollineationLabel("Line")
        if deg == 2 and span == 3:
            return CollineationLabel("Conic")
        if span == deg + 1:
            return rnc(deg)
    if dim == 2:
        if deg == 1:
            return CollineationLabel("Plane")
        if deg == 2 and span == 4:
            quads = [g for g in image.ideal.gens if g.degree() == 2]
            if len(quads) == 1:
                return CollineationLabel("QuadricSurface" if quadric_rank(quads[0]) == 4 else "QuadricCone")
        if deg == 3 and span == 5:
            return CollineationLabel("Scroll_1_2")
        if deg == 4 and span == 6:
            return CollineationLabel("Veronese")
    return CollineationLabel("Other", degree=deg, dim=dim, span=span)


def classify_net(T: Tensor3, factor: int = 1) -> NetClassification:
    """Second collineation variety of a net on ``factor``."""
    _, basis = quadric_system(T, factor)
    dimL = len(basis)
    profile = profile_base_scheme(basis)
    if profile.dim >= 1:
        g = common_factor(basis)
        if g.degree() >= 1:
            residual = span_basis([divide_exact(q, g) for q in basis])
            return NetClassification(CollineationLabel(_BY_SPAN[len(residual)]), profile, dimL, "gcd")
    if dimL <= 2:
        return NetClassification(CollineationLabel(_BY_SPAN[dimL]), profile, dimL, "dimL2")
    if profile.dim <= 0 and dimL == 6 - profile.deg:
        return NetClassification(lemma_label(profile), profile, dimL, "lemma")
    image = implicitize(basis)
    return NetClassification(label_from_image(image), profile, dimL, "oracle", image)


def oracle_label(T: Tensor3, factor: int = 1) -> tuple:
    """``(label, image)`` straight from implicitization of the quadric system."""
    _, basis = quadric_system(T, factor)
    image = implicitize(basis)
    return label_from_image(image), image


def sigma3_membership(T: Tensor3) -> bool:
    """Strassen test for the third secant variety of the Segre ``P2 x P2 x P2``."""
    return strassen_flattening(T).rank <= SIGMA3_MAX_RANK


# -- smooth cuboids ----------------------------------------------------------

@dataclass(frozen=True)
class CuboidParams:
    """Normal-form parameters; the curve is ``x0 x2^2 = x1^3 + a x0^2 x1 + b x0^3``."""

    a: Fraction
    p1: Fraction
    p2: Fraction

    @property
    def b(self) -> Fraction:
        return self.p2 ** 2 - self.p1 ** 3 - self.a * self.p1

    @property
    def discriminant(self) -> Fraction:
        return 4 * self.a ** 3 + 27 * self.b ** 2


def cuboid_matrix(params: CuboidParams, field: Field = QQ) -> LinearFormMatrix:
    ring = PolyRing(3, field)
    x0, x1, x2 = ring.gens()
    a, p1, p2 = (field(v) for v in (params.a, params.p1, params.p2))
    z = ring.zero()
    rows = (
        (x1 - x0.scale(p1), x2 - x0.scale(p2), z),
        (x2 + x0.scale(p2), x0.scale(p1 * p1 + a) + x1.scale(p1), x1),
        (z, x1, -x0),
    )
    return LinearFormMatrix(ring, rows)


def cuboid(a, p1, p2, field: Field = QQ) -> tuple:
    """``(tensor, params)`` for the cuboid normal form with parameters ``a, p1, p2``."""
    params = CuboidParams(Fraction(a), Fraction(p1), Fraction(p2))
    return tensor_from_linear_matrix(cuboid_matrix(params, field)), params


def cuboid_is_smooth(params: CuboidParams) -> bool:
    return params.discriminant != 0


def cuboid_curve(params: CuboidParams, ring: PolyRing):
    """The Weierstrass cubic ``x0 x2^2 - x1^3 - a x0^2 x1 - b x0^3``."""
    x0, x1, x2 = ring.gens()
    f = ring.field
    return x0 * x2 * x2 - x1 ** 3 - (x0 * x0 * x1).scale(f(params.a)) - (x0 ** 3).scale(f(params.b))
