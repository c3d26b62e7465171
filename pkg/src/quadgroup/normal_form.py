"""Exact arithmetic in the central extension (Z/2) x~ H1.

Every element is a pair (eps0, coefficient vector over GF(2) of length
N_n = C(n,3) - 1), the exponents of its normal form
c^eps0 X_1^eps1 ... X_N^epsN over the ordered basis. Coefficient
vectors are bit-packed into Python ints; the bilinear form is evaluated
with word-parallel AND/XOR/popcount.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .gf2 import gf2_rank, parity
from .symbols import (
    GenClass,
    QuadSymbol,
    canonical_tuples,
    classify_tuple,
    format_symbol,
)
from .words import GroupWord

Tuple4 = tuple[int, int, int, int]

_EPS_ONE = {GenClass.A1, GenClass.A2, GenClass.A4, GenClass.C2, GenClass.C3}


def _decomposition_letters(t: Tuple4, cls: GenClass) -> list[Tuple4]:
    """The basis word of a canonical symbol (central power handled separately)."""
    a, b, c, d = t
    if cls in (GenClass.G1, GenClass.G2, GenClass.G3):
        return [t]
    if cls is GenClass.A1:
        k, l = c, d
        return [(1, 2, 3, k), (1, 2, k, 3), (1, 2, 3, l), (1, 2, l, 3), (1, 2, l, k)]
    if cls is GenClass.A2:
        j, k, l = b, c, d
        return [(1, 2, k, j), (1, j, 2, k), (1, 2, l, j), (1, j, 2, l), (1, j, l, k)]
    if cls is GenClass.A3:
        j, k, l = b, c, d
        return [(1, j, 2, k), (1, 2, l, k), (1, j, 2, l), (1, j, l, k)]
    if cls is GenClass.A4:
        i, j, k, l = a, b, c, d
        return [(1, 2, k, j), (1, i, k, j), (1, j, 2, k), (1, 2, l, j),
                (1, i, l, j), (1, i, l, k), (1, j, 2, l), (1, j, l, k)]
    if cls is GenClass.B1:
        l, k = c, d
        return [(1, 2, 3, k), (1, 2, 3, l), (1, 2, l, k), (1, 3, l, k)]
    if cls is GenClass.B2:
        j, l, k = b, c, d
        return [(1, 2, 3, k), (1, 2, k, 3), (1, 2, k, j), (1, 2, 3, l),
                (1, 2, l, 3), (1, 2, l, j), (1, 2, l, k), (1, j, l, k)]
    if cls is GenClass.B3:
        i, j, l, k = a, b, c, d
        return [(1, 2, k, i), (1, i, 2, k), (1, i, k, j), (1, 2, l, i),
                (1, i, 2, l), (1, i, l, j), (1, i, l, k), (1, j, l, k)]
    if cls is GenClass.C1:
        k, l = b, d
        return [(1, 2, 3, k), (1, 3, 2, k), (1, 2, l, k), (1, 3, l, k), (1, k, 2, l)]
    if cls is GenClass.C2:
        k, j, l = b, c, d
        return [(1, 2, 3, j), (1, 2, j, 3), (1, 2, 3, k), (1, 2, k, 3), (1, 2, k, j),
                (1, j, 2, k), (1, 2, l, k), (1, j, l, k), (1, k, 2, l)]
    if cls is GenClass.C3:
        k, j, l = b, c, d
        return [(1, j, 2, k), (1, 2, l, j), (1, j, l, k), (1, k, 2, l)]
    if cls is GenClass.C4:
        k, j, l = b, c, d
        return [(1, 2, 3, j), (1, 3, 2, j), (1, 2, 3, k), (1, 2, k, j), (1, 3, 2, k),
                (1, 3, k, j), (1, j, 2, k), (1, 2, l, k), (1, 3, l, j), (1, 3, l, k),
                (1, j, l, k), (1, k, 2, l)]
    assert cls is GenClass.C5
    i, k, j, l = a, b, c, d
    return [(1, 2, 3, j), (1, 2, j, 3), (1, 2, j, i), (1, i, 2, j), (1, 2, 3, k),
            (1, 2, k, 3), (1, 2, k, i), (1, 2, k, j), (1, i, 2, k), (1, i, k, j),
            (1, j, 2, k), (1, 2, l, k), (1, i, l, j), (1, i, l, k), (1, j, l, k),
            (1, k, 2, l)]


class NormalFormContext:
    """Per-n engine state: ordered basis, bilinear-form masks, generator images.

    Built once and used read-only thereafter.
    """

    def __init__(self, n: int):
        if n < 4:
            raise ValueError(f"need n >= 4, got {n}")
        self.n = n
        self.canonical = canonical_tuples(n)
        self.basis = [t for t in self.canonical
                      if classify_tuple(t) in (GenClass.G1, GenClass.G2, GenClass.G3)]
        self.nbasis = len(self.basis)
        assert self.nbasis == comb(n, 3) - 1
        self.index = {t: i for i, t in enumerate(self.basis)}
        # column k of the form matrix: bits j < k where X_j, X_k share 3 letters
        self.colmask = []
        sets = [set(t) for t in self.basis]
        for k in range(self.nbasis):
            mask = 0
            for j in range(k):
                if len(sets[j] & sets[k]) == 3:
                    mask |= 1 << j
            self.colmask.append(mask)
        # generator images: canonical tuple -> (eps, coeff mask, form-row mask)
        self.gen_data: dict[Tuple4, tuple[int, int, int]] = {}
        self.gen_word: dict[Tuple4, tuple[int, ...]] = {}
        for t in self.canonical:
            cls = classify_tuple(t)
            eps = 1 if cls in _EPS_ONE else 0
            idxs = tuple(self.index[u] for u in _decomposition_letters(t, cls))
            assert all(x < y for x, y in zip(idxs, idxs[1:])), \
                f"decomposition of {t} is not increasing"
            avec = 0
            for i in idxs:
                avec |= 1 << i
            self.gen_data[t] = (eps, avec, self.form_row(avec))
            self.gen_word[t] = idxs

    def form_row(self, coeffs: int) -> int:
        """D . a as a bit mask (the row vector of the bilinear form)."""
        row = 0
        m = coeffs
        while m:
            k = (m & -m).bit_length() - 1
            row ^= self.colmask[k]
            m &= m - 1
        return row

    def gen_element(self, t: Tuple4) -> "Element":
        eps, avec, _ = self.gen_data[t]
        return Element(self.n, eps, avec)

    def basis_symbol(self, position: int) -> QuadSymbol:
        """1-based basis position -> symbol."""
        return QuadSymbol(*self.basis[position - 1], self.n)


@lru_cache(maxsize=None)
def get_context(n: int) -> NormalFormContext:
    return NormalFormContext(n)


@dataclass(frozen=True)
class Element:
    """A point of (Z/2) x~ H1: central bit and bit-packed coefficient vector."""

    n: int
    eps0: int
    coeffs: int

    def __post_init__(self):
        if self.eps0 not in (0, 1):
            raise ValueError("central bit must be 0 or 1")
        if self.coeffs < 0 or self.coeffs >> get_context(self.n).nbasis:
            raise ValueError("coefficient vector out of range")

    @property
    def is_identity(self) -> bool:
        return self.eps0 == 0 and self.coeffs == 0

    def __str__(self) -> str:
        ctx = get_context(self.n)
        parts = ["c"] if self.eps0 else []
        m = self.coeffs
        while m:
            k = (m & -m).bit_length() - 1
            parts.append(format_symbol(ctx.basis[k]))
            m &= m - 1
        return " ".join(parts) if parts else "1"

    def coeff_hex(self) -> str:
        return format(self.coeffs, "x")


def identity(n: int) -> Element:
    return Element(n, 0, 0)


def central(n: int) -> Element:
    return Element(n, 1, 0)


def lambda_basis(n: int) -> list[QuadSymbol]:
    """The minimal generating set, sorted by (max entry, lexicographic)."""
    ctx = get_context(n)
    return [QuadSymbol(*t, n) for t in ctx.basis]


def eps_table(c: QuadSymbol) -> int:
    """Central-bit assignment: 1 exactly on types A1, A2, A4, C2, C3."""
    if not c.is_canonical:
        raise ValueError(f"eps_table expects a canonical symbol, got {c}")
    return 1 if classify_tuple(c.entries) in _EPS_ONE else 0


def decompose(c: QuadSymbol) -> tuple[int, tuple[int, ...]]:
    """Normal-form word of a canonical symbol over the basis.

    Returns (central bit, strictly increasing 1-based basis positions);
    basis members decompose to themselves with central bit 0.
    """
    if not c.is_canonical:
        raise ValueError(f"decompose expects a canonical symbol, got {c}")
    ctx = get_context(c.n)
    eps, _, _ = ctx.gen_data[c.entries]
    return eps, tuple(i + 1 for i in ctx.gen_word[c.entries])


def gen(c: QuadSymbol) -> Element:
    """The image of a canonical symbol in the extension."""
    if not c.is_canonical:
        raise ValueError(f"gen expects a canonical symbol, got {c}")
    return get_context(c.n).gen_element(c.entries)


def _require_same_n(x: Element, y: Element) -> None:
    if x.n != y.n:
        raise ValueError(f"mixing elements with ambient sizes {x.n} and {y.n}")


def circ(x: Element, y: Element) -> int:
    """The GF(2) bilinear form t(D . a(x)) . a(y)."""
    _require_same_n(x, y)
    ctx = get_context(x.n)
    return parity(ctx.form_row(x.coeffs) & y.coeffs)


def multiply(x: Element, y: Element) -> Element:
    _require_same_n(x, y)
    return Element(x.n, x.eps0 ^ y.eps0 ^ circ(x, y), x.coeffs ^ y.coeffs)


def inverse(x: Element) -> Element:
    return Element(x.n, x.eps0 ^ circ(x, x), x.coeffs)


def commutator(x: Element, y: Element) -> Element:
    """x y x^-1 y^-1; always central with zero coefficient vector."""
    _require_same_n(x, y)
    return Element(x.n, circ(x, y) ^ circ(y, x), 0)


def element_order(x: Element) -> int:
    """Least m with x^m = identity; always 1, 2 or 4."""
    if x.coeffs == 0:
        return 1 if x.eps0 == 0 else 2
    return 2 if circ(x, x) == 0 else 4


def evaluate(w: GroupWord, n: int) -> Element:
    """Product of generator images over the letters, left to right.

    Generator images are involutions, so letter exponents do not change
    the value; they matter only for word bookkeeping.
    """
    ctx = get_context(n)
    e, a, b = 0, 0, 0
    for sym, _exp in w.letters:
        if sym.n != n:
            raise ValueError(f"letter {sym} has ambient size {sym.n}, expected {n}")
        ge, ga, gb = ctx.gen_data[sym.entries]
        e ^= ge ^ parity(b & ga)
        a ^= ga
        b ^= gb
    return Element(n, e, a)


def image_order(n: int) -> int:
    """Order of the subgroup generated by all generator images.

    2^(rank of the coefficient images), doubled when the central element
    (1, 0) is reachable, i.e. when some pair of generators shares exactly
    3 letters. Faithful for the represented group only when n >= 6.
    """
    ctx = get_context(n)
    rank = gf2_rank([avec for _, avec, _ in ctx.gen_data.values()])
    central_reachable = any(mask for mask in ctx.colmask)
    return (1 << rank) * (2 if central_reachable else 1)
