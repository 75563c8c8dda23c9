"""Order-3 tensors, their flattenings and matrices of linear forms.

Conventions for a tensor ``T`` with entries ``T[i, j, k]``:

* factor 1 gives the ``n2 x n3`` matrix with entries ``sum_i T[i,j,k] x_i``;
* factor 2 gives the ``n3 x n1`` matrix with entries ``sum_j T[i,j,k] x_j``
  at position ``(k, i)``;
* factor 3 gives the ``n1 x n2`` matrix with entries ``sum_k T[i,j,k] x_k``.

Flattening rows are ordered by the chosen factor; columns run over the two
remaining factors in the same cyclic order, the second one varying fastest.
"""

from __future__ import annotations

import itertools
import json
import warnings
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    BadMinorSize,
    NotConciseWarning,
    ParseError,
    UndefinedCollineation,
    WrongDims,
    ZeroTensor,
)
from .ideals import Ideal, profile_scheme, saturate_irrelevant
from .linalg import rank, rref
from .polyring import Poly, PolyRing, monomials_of_degree
from .scalars import QQ, Field, format_scalar, parse_field

_CYCLIC = {1: (1, 2), 2: (2, 0), 3: (0, 1)}


class Tensor3:
    """Dense ``n1 x n2 x n3`` tensor with entries in an exact field."""

    __slots__ = ("dims", "field", "data")

    def __init__(self, dims: Sequence[int], data: Sequence, field: Field = QQ):
        dims = tuple(int(d) for d in dims)
        if len(dims) != 3 or any(d < 1 for d in dims):
            raise WrongDims(f"bad dimensions {dims}")
        n = dims[0] * dims[1] * dims[2]
        if len(data) != n:
            raise WrongDims(f"expected {n} entries, got {len(data)}")
        self.dims = dims
        self.field = field
        self.data = tuple(field(x) for x in data)

    @classmethod
    def zeros(cls, dims: Sequence[int], field: Field = QQ) -> "Tensor3":
        return cls(dims, [field.zero] * (dims[0] * dims[1] * dims[2]), field)

    @classmethod
    def from_terms(cls, dims: Sequence[int], terms: Iterable, field: Field = QQ) -> "Tensor3":
        """Build from ``(i, j, k, value)`` tuples; repeated indices accumulate."""
        n1, n2, n3 = dims
        data = [field.zero] * (n1 * n2 * n3)
        for i, j, k, v in terms:
            if not (0 <= i < n1 and 0 <= j < n2 and 0 <= k < n3):
                raise WrongDims(f"index {(i, j, k)} outside {tuple(dims)}")
            idx = (i * n2 + j) * n3 + k
            data[idx] = data[idx] + field(v)
        return cls(dims, data, field)

    def _index(self, i, j, k):
        return (i * self.dims[1] + j) * self.dims[2] + k

    def __getitem__(self, idx):
        i, j, k = idx
        return self.data[self._index(i, j, k)]

    def __eq__(self, other):
        return isinstance(other, Tensor3) and self.dims == other.dims and self.field == other.field and self.data == other.data

    def __hash__(self):
        return hash((self.dims, self.data))

    def __repr__(self):
        return f"Tensor3({self.dims}, {len(self.nonzero())} nonzero entries, {self.field!r})"

    def nonzero(self) -> list:
        n1, n2, n3 = self.dims
        out = []
        for i in range(n1):
            for j in range(n2):
                for k in range(n3):
                    v = self.data[(i * n2 + j) * n3 + k]
                    if v:
                        out.append((i, j, k, v))
        return out

    def is_zero(self) -> bool:
        return not any(self.data)

    def permute(self, perm: Sequence[int]) -> "Tensor3":
        """Tensor whose axis ``t`` is this tensor's axis ``perm[t]``."""
        dims = tuple(self.dims[p] for p in perm)
        terms = []
        for idx in self.nonzero():
            old = idx[:3]
            terms.append((old[perm[0]], old[perm[1]], old[perm[2]], idx[3]))
        return Tensor3.from_terms(dims, terms, self.field)

    def swap23(self) -> "Tensor3":
        return self.permute((0, 2, 1))

    def scale(self, c) -> "Tensor3":
        c = self.field(c)
        return Tensor3(self.dims, [x * c for x in self.data], self.field)

    def __add__(self, other: "Tensor3") -> "Tensor3":
        if self.dims != other.dims:
            raise WrongDims("dimension mismatch")
        return Tensor3(self.dims, [a + b for a, b in zip(self.data, other.data)], self.field)

    def to_field(self, field: Field) -> "Tensor3":
        return Tensor3(self.dims, [field(x) for x in self.data], field)

    def transform(self, g1=None, g2=None, g3=None) -> "Tensor3":
        """Apply matrices on each factor: ``T'[a,b,c] = sum g1[a][i] g2[b][j] g3[c][k] T[i,j,k]``."""
        t = self
        for axis, g in enumerate((g1, g2, g3)):
            if g is None:
                continue
            perm = [axis] + [a for a in range(3) if a != axis]
            moved = t.permute(perm)
            n1, n2, n3 = moved.dims
            out_rows = len(g)
            terms = []
            for a in range(out_rows):
                for i in range(n1):
                    c = g[a][i]
                    if not c:
                        continue
                    for j in range(n2):
                        for k in range(n3):
                            v = moved[i, j, k]
                            if v:
                                terms.append((a, j, k, c * v))
            moved = Tensor3.from_terms((out_rows, n2, n3), terms, t.field)
            inv = [perm.index(a) for a in range(3)]
            t = moved.permute(inv)
        return t

    # -- serialization -------------------------------------------------
    def to_json_obj(self) -> dict:
        return {
            "dims": list(self.dims),
            "field": self.field.name,
            "entries": [{"i": i, "j": j, "k": k, "v": format_scalar(v)} for i, j, k, v in self.nonzero()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Tensor3":
        try:
            dims = obj["dims"]
            field = parse_field(obj.get("field", "qq"))
            terms = [(e["i"], e["j"], e["k"], e["v"]) for e in obj.get("entries", [])]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed tensor JSON: {exc}") from exc
        return cls.from_terms(dims, terms, field)

    @classmethod
    def from_json(cls, text: str) -> "Tensor3":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return cls.from_json_obj(obj)


def unit_tensor(n: int = 3, field: Field = QQ) -> Tensor3:
    return Tensor3.from_terms((n, n, n), [(i, i, i, 1) for i in range(n)], field)


def rank_one(a: Sequence, b: Sequence, c: Sequence, field: Field = QQ) -> Tensor3:
    terms = []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            for k, z in enumerate(c):
                terms.append((i, j, k, field(x) * field(y) * field(z)))
    return Tensor3.from_terms((len(a), len(b), len(c)), terms, field)


# -- flattenings --------------------------------------------------------------

def _check_factor(factor: int):
    if factor not in (1, 2, 3):
        raise ValueError(f"factor must be 1, 2 or 3, got {factor}")


def flattening(T: Tensor3, factor: int) -> list:
    """``n_factor x (product of the other two)`` matrix of the flattening."""
    _check_factor(factor)
    a = factor - 1
    b, c = _CYCLIC[factor]
    dims = T.dims
    rows = []
    for x in range(dims[a]):
        row = []
        for y in range(dims[b]):
            for z in range(dims[c]):
                idx = [0, 0, 0]
                idx[a], idx[b], idx[c] = x, y, z
                row.append(T[tuple(idx)])
        rows.append(row)
    return rows


def flattening_ranks(T: Tensor3) -> tuple:
    return tuple(rank(flattening(T, f)) for f in (1, 2, 3))


def is_concise(T: Tensor3) -> bool:
    return flattening_ranks(T) == T.dims


def _reduce_axis(T: Tensor3, axis: int) -> Tensor3:
    perm = [axis] + [a for a in range(3) if a != axis]
    moved = T.permute(perm)
    n1, n2, n3 = moved.dims
    rows = [[moved[i, j, k] for j in range(n2) for k in range(n3)] for i in range(n1)]
    basis, _ = rref(rows)
    terms = []
    for r, row in enumerate(basis):
        for col, v in enumerate(row):
            if v:
                terms.append((r, col // n3, col % n3, v))
    core = Tensor3.from_terms((len(basis), n2, n3), terms, T.field)
    inv = [perm.index(a) for a in range(3)]
    return core.permute(inv)


def concise_reduce(T: Tensor3) -> tuple:
    """Concise core of ``T`` and, per factor, whether that factor was cut down.

    The core is obtained by a change of basis on each non-injective factor:
    the slices along that factor are replaced by the rows of the reduced
    echelon form of its flattening.
    """
    if T.is_zero():
        raise ZeroTensor("the zero tensor has no concise core")
    ranks = flattening_ranks(T)
    flags = tuple(r < n for r, n in zip(ranks, T.dims))
    core = T
    for axis in range(3):
        if flags[axis]:
            core = _reduce_axis(core, axis)
    return core, flags


# -- matrices of linear forms -----------------------------------------------------

@dataclass(frozen=True)
class LinearFormMatrix:
    """A matrix whose entries are linear forms in ``ring``'s variables."""

    ring: PolyRing
    rows: tuple

    @property
    def shape(self) -> tuple:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, idx):
        r, c = idx
        return self.rows[r][c]

    def transpose(self) -> "LinearFormMatrix":
        return LinearFormMatrix(self.ring, tuple(zip(*self.rows)))

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.rows)


def linear_matrix(T: Tensor3, factor: int = 1, ring: Optional[PolyRing] = None) -> LinearFormMatrix:
    """The flattening image as a matrix of linear forms (see module docstring)."""
    _check_factor(factor)
    a = factor - 1
    b, c = _CYCLIC[factor]
    if rank(flattening(T, factor)) < T.dims[a]:
        warnings.warn(f"tensor is not concise in factor {factor}", NotConciseWarning, stacklevel=2)
    ring = ring or PolyRing(T.dims[a], T.field)
    gens = ring.gens()
    rows = []
    for y in range(T.dims[b]):
        row = []
        for z in range(T.dims[c]):
            terms = {}
            for x in range(T.dims[a]):
                idx = [0, 0, 0]
                idx[a], idx[b], idx[c] = x, y, z
                v = T[tuple(idx)]
                if v:
                    terms[gens[x].lm()] = v
            row.append(Poly(ring, terms))
        rows.append(tuple(row))
    return LinearFormMatrix(ring, tuple(rows))


def tensor_from_linear_matrix(M: LinearFormMatrix) -> Tensor3:
    """Inverse of ``linear_matrix(., 1)``: ``T[i,j,k]`` is the ``x_i`` coefficient of ``M[j][k]``."""
    n1 = M.ring.nvars
    n2, n3 = M.shape
    terms = []
    for j, row in enumerate(M.rows):
        for k, f in enumerate(row):
            for m, c in f.terms.items():
                if sum(m) != 1:
                    raise ValueError(f"entry {f} is not a linear form")
                terms.append((m.index(1), j, k, c))
    return Tensor3.from_terms((n1, n2, n3), terms, M.ring.field)


def minors(M: LinearFormMatrix, k: int) -> list:
    """All ``k x k`` minors, row subsets outer and column subsets inner, both lexicographic."""
    nr, nc = M.shape
    if not 1 <= k <= min(nr, nc):
        raise BadMinorSize(f"k={k} for a {nr}x{nc} matrix")
    ring = M.ring
    zero = ring.zero()
    memo: dict = {}

    def det(rows: tuple, cols: tuple) -> Poly:
        if len(rows) == 1:
            return M.rows[rows[0]][cols[0]]
        key = (rows, cols)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = zero
        r0 = rows[0]
        for idx, c in enumerate(cols):
            entry = M.rows[r0][c]
            if not entry:
                continue
            sub = det(rows[1:], cols[:idx] + cols[idx + 1:])
            if not sub:
                continue
            term = entry * sub
            total = total - term if idx % 2 else total + term
        memo[key] = total
        return total

    out = []
    for rows in itertools.combinations(range(nr), k):
        for cols in itertools.combinations(range(nc), k):
            out.append(det(rows, cols))
    return out


def minor_ideal(M: LinearFormMatrix, k: int) -> tuple:
    """``(ideal of k-minors, ordered list of all k-minors)``; the list is the minors map."""
    ms = minors(M, k)
    return Ideal(M.ring, ms), ms


def span_basis(polys: Sequence[Poly]) -> list:
    """Row-reduced basis of the linear span of homogeneous polynomials of one degree."""
    polys = [p for p in polys if p]
    if not polys:
        return []
    ring = polys[0].ring
    d = polys[0].degree()
    monos = monomials_of_degree(ring.nvars, d)
    col = {m: i for i, m in enumerate(monos)}
    zero = ring.field.zero
    rows = []
    for p in polys:
        row = [zero] * len(monos)
        for m, c in p.terms.items():
            row[col[m]] = c
        rows.append(row)
    basis, _ = rref(rows)
    return [Poly(ring, {monos[i]: c for i, c in enumerate(row) if c}) for row in basis]


def minor_span_dim(M: LinearFormMatrix, k: int) -> int:
    return len(span_basis(minors(M, k)))


def base_locus(T: Tensor3, factor: int = 1, k: int = 2) -> tuple:
    """Saturated ideal of the k-th base locus on ``factor`` and its scheme profile."""
    core = _concise_or_warn(T)
    M = linear_matrix(core, factor)
    I, ms = minor_ideal(M, k)
    if I.is_zero():
        raise UndefinedCollineation(f"all {k}x{k} minors vanish on factor {factor}")
    sat = saturate_irrelevant(I)
    profile, _ = profile_scheme(sat)
    return sat, profile


def _concise_or_warn(T: Tensor3) -> Tensor3:
    core, flags = concise_reduce(T)
    if any(flags):
        warnings.warn(f"tensor reduced to its concise core {core.dims}", NotConciseWarning, stacklevel=3)
    return core


# -- Strassen flattening -------------------------------------------------------

_WEDGE_PAIRS = ((0, 1), (0, 2), (1, 2))


@dataclass(frozen=True)
class StrassenMatrix:
    matrix: tuple
    rank: int


def strassen_flattening(T: Tensor3) -> StrassenMatrix:
    """The map ``V1 ⊗ V2* -> Λ²V1 ⊗ V3``, ``a ⊗ β -> Σ (a ∧ u) ⊗ w`` where ``T(β) = Σ u ⊗ w``.

    Columns are indexed by ``(p, j)`` for ``a_p ⊗ b_j*``, rows by
    ``((p, q), r)`` for ``(a_p ∧ a_q) ⊗ c_r`` with ``p < q``.
    """
    if T.dims != (3, 3, 3):
        raise WrongDims(f"Strassen flattening needs a 3x3x3 tensor, got {T.dims}")
    zero = T.field.zero
    mat = [[zero] * 9 for _ in range(9)]
    for i, j, k, v in T.nonzero():
        for p in range(3):
            if p == i:
                continue
            pair = (min(p, i), max(p, i))
            sign = v if p < i else -v
            row = _WEDGE_PAIRS.index(pair) * 3 + k
            col = p * 3 + j
            mat[row][col] = mat[row][col] + sign
    return StrassenMatrix(tuple(tuple(r) for r in mat), rank(mat))
