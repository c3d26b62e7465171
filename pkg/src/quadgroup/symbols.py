"""Quadruple symbols, dihedral canonicalization and the fifteen-type classification.

A symbol (i j k l) is an ordered quadruple of distinct integers in [n].
Two symbols related by the dihedral moves (ijkl) -> (jkli) and
(ijkl) -> (lkji) denote the same group generator; the canonical
representative of each 8-element orbit is the one with first entry
minimal and second entry smaller than the fourth.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass


class GenClass(enum.Enum):
    """Type tags of canonical symbols; G1/G2/G3 exactly make up the basis set."""

    G1 = "G1"
    G2 = "G2"
    G3 = "G3"
    A1 = "A1"
    A2 = "A2"
    A3 = "A3"
    A4 = "A4"
    B1 = "B1"
    B2 = "B2"
    B3 = "B3"
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    C5 = "C5"


@dataclass(frozen=True, order=True)
class QuadSymbol:
    """An ordered quadruple of distinct integers in [n], with ambient n explicit."""

    i: int
    j: int
    k: int
    l: int
    n: int

    def __post_init__(self):
        t = (self.i, self.j, self.k, self.l)
        if self.n < 4:
            raise ValueError(f"ambient size must be >= 4, got {self.n}")
        if len(set(t)) != 4:
            raise ValueError(f"entries must be pairwise distinct: {t}")
        if not all(1 <= x <= self.n for x in t):
            raise ValueError(f"entries must lie in 1..{self.n}: {t}")

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.i, self.j, self.k, self.l)

    @property
    def underlying_set(self) -> frozenset[int]:
        return frozenset(self.entries)

    @property
    def diagonal_pairing(self) -> frozenset[frozenset[int]]:
        """The pairing {{i,k},{j,l}}, invariant under the dihedral moves."""
        return frozenset({frozenset({self.i, self.k}), frozenset({self.j, self.l})})

    @property
    def is_canonical(self) -> bool:
        return self.i == min(self.entries) and self.j < self.l

    def __str__(self) -> str:
        return format_symbol(self.entries)


def format_symbol(t: tuple[int, int, int, int]) -> str:
    return "({} {} {} {})".format(*t)


_SYMBOL_RE = re.compile(r"\(\s*(\d+)\s+(\d+)\s+(\d+)\s+(\d+)\s*\)")


def parse_symbol(text: str, n: int) -> QuadSymbol:
    """Parse "(i j k l)"; whitespace inside the parentheses is flexible."""
    m = _SYMBOL_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"not a symbol: {text!r}")
    a, b, c, d = (int(g) for g in m.groups())
    return QuadSymbol(a, b, c, d, n)


def dihedral_orbit(t: tuple[int, int, int, int]) -> list[tuple[int, int, int, int]]:
    """The 8 tuples obtained by the 4 cyclic shifts and their reversals."""
    orbit = []
    for s in range(4):
        rot = t[s:] + t[:s]
        orbit.append(rot)
        orbit.append(rot[::-1])
    return orbit


def canonical_tuple(t: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    """The unique orbit member with first entry minimal and second < fourth."""
    picks = [u for u in dihedral_orbit(t) if u[0] == min(t) and u[1] < u[3]]
    assert len(picks) == 1, f"dihedral orbit of {t} has {len(picks)} minimal members"
    return picks[0]


def canonicalize(q: QuadSymbol) -> QuadSymbol:
    if q.is_canonical:
        return q
    return QuadSymbol(*canonical_tuple(q.entries), q.n)


def _require_same_n(p: QuadSymbol, q: QuadSymbol) -> None:
    if p.n != q.n:
        raise ValueError(f"mixing symbols with ambient sizes {p.n} and {q.n}")


def shared_count(p: QuadSymbol, q: QuadSymbol) -> int:
    """|{i,j,k,l} n {s,t,u,v}|, in 0..4."""
    _require_same_n(p, q)
    return len(set(p.entries) & set(q.entries))


def classify_tuple(t: tuple[int, int, int, int]) -> GenClass:
    """Type tag of a canonical tuple (a b c d): a minimal, b < d."""
    a, b, c, d = t
    assert a == min(t) and b < d, f"not canonical: {t}"
    if a == 1:
        if c == 2:
            return GenClass.G2          # (1 j 2 l)
        if c == 3 and b == 2:
            return GenClass.G1          # (1 2 3 l)
        if c == 3:
            return GenClass.C1          # (1 k 3 l), k >= 4
        # c >= 4; the three relative orders of b, c, d (with b < d) split:
        if b < c < d:
            return GenClass.A1 if b == 2 else GenClass.A2
        if b < d < c:
            return GenClass.G3          # (1 j l k)
        return GenClass.C2              # c < b < d, i.e. (1 k j l) with j >= 4
    if a == 2:
        if b < c < d:
            return GenClass.A3
        if b < d < c:
            return GenClass.B1 if b == 3 else GenClass.B2
        return GenClass.C3
    if a == 3:
        if b < c < d:
            return GenClass.A4
        if b < d < c:
            return GenClass.B3
        return GenClass.C4
    if b < c < d:
        return GenClass.A4
    if b < d < c:
        return GenClass.B3
    return GenClass.C5


def classify(c: QuadSymbol) -> GenClass:
    if not c.is_canonical:
        raise ValueError(f"classify expects a canonical symbol, got {c}")
    return classify_tuple(c.entries)


def canonical_tuples(n: int) -> list[tuple[int, int, int, int]]:
    """All canonical tuples over [n], sorted by (max entry, lexicographic)."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    out = []
    seen = set()
    from itertools import permutations, combinations

    for four in combinations(range(1, n + 1), 4):
        for t in permutations(four):
            c = tuple(t)
            if c[0] == min(c) and c[1] < c[3] and c not in seen:
                seen.add(c)
                out.append(c)
    out.sort(key=lambda t: (max(t), t))
    return out


def enumerate_canonical(n: int) -> list[QuadSymbol]:
    """All canonical symbols over [n]; length n(n-1)(n-2)(n-3)/8."""
    symbols = [QuadSymbol(*t, n) for t in canonical_tuples(n)]
    assert len(symbols) == n * (n - 1) * (n - 2) * (n - 3) // 8
    return symbols
