"""Matrix pencils: Kronecker blocks, base-locus degrees and their collineation curves.

For a pencil the k-minors are binary forms of degree k; their gcd ``g`` generates
the saturated ideal of the k-th base locus, and the collineation variety is the
rational normal curve of degree ``k - deg g``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    EmptySpec,
    NotBinaryForm,
    OutOfRange,
    ParseError,
    UndefinedCollineation,
    WrongDims,
)
from .ideals import Ideal, graded_piece_basis, saturate_irrelevant
from .labels import CollineationLabel, rnc
from .linalg import rank
from .polyring import PolyRing, binary_gcd
from .scalars import QQ, Field, format_scalar
from .tensors import LinearFormMatrix, Tensor3, linear_matrix, minors, tensor_from_linear_matrix


@dataclass(frozen=True)
class Block:
    """One Kronecker block: ``L`` (h x h+1), ``R`` (h+1 x h) or ``J`` (h x h, eigenvalue ``lam``)."""

    kind: str
    h: int
    lam: Fraction = Fraction(0)

    def __post_init__(self):
        if self.kind not in ("L", "R", "J"):
            raise ValueError(f"unknown block kind {self.kind!r}")
        if self.h < 1:
            raise ValueError("block size must be at least 1")

    @property
    def shape(self) -> tuple:
        if self.kind == "L":
            return (self.h, self.h + 1)
        if self.kind == "R":
            return (self.h + 1, self.h)
        return (self.h, self.h)

    def __str__(self):
        if self.kind == "J":
            return f"J{self.h}({format_scalar(self.lam)})"
        return f"{self.kind}{self.h}"


_BLOCK_RE = re.compile(r"([LRJ])(\d+)(?:\(([^)]*)\))?")


def parse_blocks(text: str) -> list:
    """Read the block language, e.g. ``"L2+J3(1)+R1"``."""
    blocks = []
    for piece in text.replace(" ", "").split("+"):
        m = _BLOCK_RE.fullmatch(piece)
        if not m:
            raise ParseError(f"bad block {piece!r} in {text!r}")
        kind, h, lam = m.groups()
        if kind == "J":
            if lam is None:
                raise ParseError(f"Jordan block {piece!r} needs an eigenvalue, e.g. J2(0)")
            try:
                lam_v = Fraction(lam)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad eigenvalue in {piece!r}") from exc
            blocks.append(Block("J", int(h), lam_v))
        else:
            if lam is not None:
                raise ParseError(f"only J blocks take an eigenvalue: {piece!r}")
            blocks.append(Block(kind, int(h)))
    return blocks


def format_blocks(blocks: Sequence[Block]) -> str:
    return "+".join(str(b) for b in blocks)


def pencil_matrix(blocks: Sequence[Block], field: Field = QQ) -> LinearFormMatrix:
    """Block-diagonal matrix of binary linear forms."""
    if not blocks:
        raise EmptySpec("a pencil needs at least one block")
    ring = PolyRing(2, field)
    x0, x1 = ring.gens()
    nrows = sum(b.shape[0] for b in blocks)
    ncols = sum(b.shape[1] for b in blocks)
    rows = [[ring.zero() for _ in range(ncols)] for _ in range(nrows)]
    r0 = c0 = 0
    for b in blocks:
        if b.kind == "L":
            for r in range(b.h):
                rows[r0 + r][c0 + r] = x0
                rows[r0 + r][c0 + r + 1] = x1
        elif b.kind == "R":
            for c in range(b.h):
                rows[r0 + c][c0 + c] = x0
                rows[r0 + c + 1][c0 + c] = x1
        else:
            diag = x0 + x1.scale(field(b.lam))
            for r in range(b.h):
                rows[r0 + r][c0 + r] = diag
                if r + 1 < b.h:
                    rows[r0 + r][c0 + r + 1] = x1
        r0 += b.shape[0]
        c0 += b.shape[1]
    return LinearFormMatrix(ring, tuple(tuple(r) for r in rows))


def build_pencil(blocks: Sequence[Block] | str, field: Field = QQ) -> Tensor3:
    """The ``2 x rows x cols`` tensor of a block-diagonal Kronecker pencil."""
    if isinstance(blocks, str):
        blocks = parse_blocks(blocks)
    return tensor_from_linear_matrix(pencil_matrix(blocks, field))


def _pencil_minors(T: Tensor3, k: int) -> list:
    if T.dims[0] != 2:
        raise WrongDims(f"a pencil has first dimension 2, got {T.dims}")
    M = _matrix(T)
    return minors(M, k)


def _matrix(T: Tensor3) -> LinearFormMatrix:
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return linear_matrix(T, 1)


def pencil_base_degree(T: Tensor3, k: int) -> int:
    """Degree of the gcd of all k-minors, i.e. the degree of the k-th base locus."""
    ms = [m for m in _pencil_minors(T, k) if m]
    if not ms:
        raise UndefinedCollineation(f"all {k}x{k} minors vanish")
    g = ms[0]
    for m in ms[1:]:
        if g.degree() == 0:
            break
        g = binary_gcd(g, m)
    return g.degree()


def admissible(n2: int, n3: int, k: int) -> Optional[str]:
    """``None`` when ``k`` is admissible for an ``n2 x n3`` pencil, else the reason it is not."""
    a, b = min(n2, n3), max(n2, n3)
    if k < 1:
        return f"k={k} must be at least 1"
    if k > a:
        return f"k={k} exceeds min(n2, n3)={a}"
    if a == b and k == a:
        return f"k={k} equals n2=n3; the curve classification needs k < n2 for square pencils"
    return None


def admissible_ks(n2: int, n3: int) -> list:
    return [k for k in range(1, min(n2, n3) + 1) if admissible(n2, n3, k) is None]


def classify_pencil(T: Tensor3, k: int) -> CollineationLabel:
    """``RNC(k - p)`` with ``p`` the base-locus degree; a point when ``p = k``."""
    if T.dims[0] != 2:
        raise WrongDims(f"a pencil has first dimension 2, got {T.dims}")
    n2, n3 = T.dims[1], T.dims[2]
    reason = admissible(n2, n3, k)
    if reason and not (n2 == n3 == k):
        return CollineationLabel("Undefined", reason=reason)
    if reason:
        # a single minor, the determinant: its image is a point unless it vanishes
        if not any(_pencil_minors(T, k)):
            return CollineationLabel("Undefined", reason="the determinant vanishes identically")
        return rnc(0)
    try:
        p = pencil_base_degree(T, k)
    except UndefinedCollineation as exc:
        return CollineationLabel("Undefined", reason=str(exc))
    return rnc(k - p)


def check_saturation_property(M: LinearFormMatrix, r: int) -> bool:
    """Does the degree-r part of the r-minor ideal equal that of its saturation?"""
    if M.ring.nvars != 2:
        raise NotBinaryForm(f"expected a matrix of binary forms, got {M.ring.nvars} variables")
    ms = [m for m in minors(M, r) if m]
    if not ms:
        return True
    sat = saturate_irrelevant(Ideal(M.ring, ms))
    left = graded_piece_basis(ms, r)
    right = graded_piece_basis(list(sat.gens), r)
    if len(left) != len(right):
        return False
    return rank(left + right) == len(left)


def stratum_dimension(n2: int, n3: int, k: int, s: int) -> list:
    """Dimensions of the components of the pencil stratum with curves of degree ``s`` from k-minors."""
    if not (0 <= s <= k <= n2 <= n3):
        raise OutOfRange(f"need 0 <= s <= k <= n2 <= n3, got s={s}, k={k}, n2={n2}, n3={n3}")
    if k < 1:
        raise OutOfRange("k must be positive")
    if not (n2 < n3 or k < n2):
        raise OutOfRange("need n2 < n3 or k < n2")
    gap = k - s
    if gap == 0:
        return [2 * n2 * n3 - 1]
    if gap == 1:
        return [n2 * n3 + (k - 1) * (n2 + n3 - (k - 1))]
    if gap == 2:
        two_points = 2 * (k - 1) * (n2 + n3 - (k - 1))
        if k == 2:
            # the component from B_{k-1} != 0 does not exist for concise pencils when k = 2
            return [two_points]
        return [two_points, n2 * n3 + (k - 2) * (n2 + n3 - (k - 2))]
    raise OutOfRange(f"no dimension formula for k - s = {gap}")


# -- random pencils for property checks --------------------------------------

def random_blocks(rng: random.Random, max_rows: int = 6, max_cols: int = 7) -> list:
    """Random Kronecker blocks whose total shape fits in ``max_rows x max_cols``."""
    while True:
        blocks = []
        rows = cols = 0
        for _ in range(rng.randint(1, 4)):
            kind = rng.choice("LRJJ")
            h = rng.randint(1, 3)
            lam = Fraction(rng.randint(-2, 2)) if kind == "J" else Fraction(0)
            b = Block(kind, h, lam)
            if rows + b.shape[0] <= max_rows and cols + b.shape[1] <= max_cols:
                blocks.append(b)
                rows += b.shape[0]
                cols += b.shape[1]
        if blocks and min(rows, cols) >= 2:
            return blocks


def random_invertible(rng: random.Random, n: int, field: Field = QQ) -> list:
    while True:
        m = [[field(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        if rank(m) == n:
            return m


def random_pencil(rng: random.Random, max_rows: int = 6, max_cols: int = 7, field: Field = QQ) -> tuple:
    """``(blocks, tensor)``: a block pencil moved by random invertible row and column operations."""
    blocks = random_blocks(rng, max_rows, max_cols)
    T = build_pencil(blocks, field)
    g2 = random_invertible(rng, T.dims[1], field)
    g3 = random_invertible(rng, T.dims[2], field)
    return blocks, T.transform(None, g2, g3)
