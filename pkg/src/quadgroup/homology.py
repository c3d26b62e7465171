"""Abelianization apparatus: symbol images in GF(2) spaces on 2- and
3-subsets, rank computation, and the change of basis to basis coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .gf2 import Gf2Solver, gf2_rank
from .normal_form import get_context
from .symbols import QuadSymbol


def subset_rank(subset: tuple[int, ...]) -> int:
    """Colexicographic rank of a sorted subset of positive integers."""
    return sum(comb(x - 1, i + 1) for i, x in enumerate(subset))


@lru_cache(maxsize=None)
def subsets_colex(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    subs = sorted(combinations(range(1, n + 1), k), key=subset_rank)
    assert [subset_rank(s) for s in subs] == list(range(comb(n, k)))
    return tuple(subs)


@dataclass(frozen=True)
class SubsetVector:
    """GF(2) vector indexed by the k-subsets of [n] in colexicographic order."""

    n: int
    k: int
    bits: int

    @property
    def dim(self) -> int:
        return comb(self.n, self.k)

    def __add__(self, other: "SubsetVector") -> "SubsetVector":
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("dimension mismatch")
        return SubsetVector(self.n, self.k, self.bits ^ other.bits)

    def support(self) -> list[tuple[int, ...]]:
        subs = subsets_colex(self.n, self.k)
        return [subs[i] for i in range(self.dim) if self.bits >> i & 1]


def phi3(q: QuadSymbol) -> SubsetVector:
    """Sum of the four 3-subsets of the symbol's underlying set."""
    bits = 0
    for triple in combinations(sorted(q.entries), 3):
        bits ^= 1 << subset_rank(triple)
    return SubsetVector(q.n, 3, bits)


def phi2(q: QuadSymbol) -> SubsetVector:
    """Sum of the two diagonal pairs {i,k} and {j,l}."""
    bits = 0
    for pair in q.diagonal_pairing:
        bits ^= 1 << subset_rank(tuple(sorted(pair)))
    return SubsetVector(q.n, 2, bits)


def _phi_mask(q: QuadSymbol) -> int:
    """phi3 and phi2 concatenated: 3-subset bits low, 2-subset bits high."""
    return phi3(q).bits | phi2(q).bits << comb(q.n, 3)


def abelianization_rank(n: int) -> int:
    """GF(2) rank of the combined images of all canonical symbols."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    ctx = get_context(n)
    rows = [_phi_mask(QuadSymbol(*t, n)) for t in ctx.canonical]
    return gf2_rank(rows)


@lru_cache(maxsize=None)
def _basis_solver(n: int) -> Gf2Solver:
    ctx = get_context(n)
    return Gf2Solver([_phi_mask(QuadSymbol(*t, n)) for t in ctx.basis])


def lambda_coordinates(q: QuadSymbol) -> int:
    """Coordinate bit mask of the symbol's image over the basis images.

    Computed purely from the subset-space images by linear solving; an
    independent route to the coefficient vector of the normal-form engine.
    """
    return _basis_solver(q.n).solve(_phi_mask(q))
