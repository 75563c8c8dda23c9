"""Hilbert series of monomial ideals and the dimension/degree read off them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable

from .polyring import mono_divides


@dataclass(frozen=True)
class HilbertData:
    """Projective dimension and degree of ``Proj(R/I)``.

    ``dim == -1`` is the empty scheme; its degree is reported as 0.
    """

    dim: int
    degree: int


def minimalize(monos: Iterable[tuple]) -> tuple:
    """Minimal generators of the monomial ideal spanned by ``monos``."""
    ms = sorted(set(monos), key=sum)
    out: list = []
    for m in ms:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return tuple(sorted(out))


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=1 << 16)
def _numerator(gens: tuple) -> tuple:
    if not gens:
        return (1,)
    # pure powers of pairwise distinct variables: a complete intersection
    supports = []
    for g in gens:
        nz = [i for i, e in enumerate(g) if e]
        if len(nz) != 1:
            break
        supports.append(nz[0])
    else:
        if len(set(supports)) == len(supports):
            out = [1]
            for g in gens:
                d = sum(g)
                out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
            return tuple(out)
    # split on the generator of largest degree: N(I) = N(J) - t^deg(m) N(J : m)
    pivot = max(gens, key=lambda g: (sum(g), g))
    rest = tuple(g for g in gens if g != pivot)
    colon = minimalize(tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in rest)
    shifted = [0] * sum(pivot) + list(_numerator(colon))
    return tuple(_poly_sub(list(_numerator(rest)), shifted))


def hilbert_numerator(monos: Iterable[tuple]) -> list:
    """Numerator ``N(t)`` of the Hilbert series ``N(t) / (1 - t)^n``, lowest degree first."""
    return list(_numerator(minimalize(monos)))


def dim_degree_from_numerator(num: list, nvars: int) -> HilbertData:
    num = list(num)
    while num and num[-1] == 0:
        num.pop()
    if not num:
        return HilbertData(-1, 0)
    j = 0
    # divide by (1 - t) while t = 1 is a root
    while sum(num) == 0:
        q = []
        acc = 0
        for c in num[:-1]:
            acc += c
            q.append(acc)
        num = q
        j += 1
    krull = nvars - j
    if krull == 0:
        return HilbertData(-1, 0)
    return HilbertData(krull - 1, sum(num))


def hilbert_data_of_monomials(monos: Iterable[tuple], nvars: int) -> HilbertData:
    return dim_degree_from_numerator(hilbert_numerator(monos), nvars)


def hilbert_function(monos: Iterable[tuple], nvars: int, degree: int) -> int:
    """Dimension of the degree-``degree`` part of ``R / (monos)``."""
    num = hilbert_numerator(monos)
    # coefficient of t^degree in N(t) * sum_k C(k + n - 1, n - 1) t^k
    total = 0
    for i, c in enumerate(num):
        k = degree - i
        if k >= 0:
            total += c * comb(k + nvars - 1, nvars - 1)
    return total
