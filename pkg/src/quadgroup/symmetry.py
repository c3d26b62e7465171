"""The symmetric-group action on symbols, words and elements."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .normal_form import Element, central, get_context, identity, multiply
from .symbols import QuadSymbol, canonicalize


@dataclass(frozen=True)
class Permutation:
    """A bijection on [n], stored as the 1-based image array."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a bijection on [{len(self.images)}]: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(i) = self(other(i))."""
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        img = [0] * self.n
        for i in range(1, self.n + 1):
            img[self(i) - 1] = i
        return Permutation(tuple(img))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        img = list(range(1, n + 1))
        img[a - 1], img[b - 1] = b, a
        return cls(tuple(img))

    @classmethod
    def from_cycles(cls, text: str, n: int) -> "Permutation":
        """Parse cycle notation, e.g. "(1 2)(5 6)"."""
        img = list(range(1, n + 1))
        cycles = re.findall(r"\(([^()]*)\)", text)
        if not cycles and text.strip():
            raise ValueError(f"cannot parse cycles: {text!r}")
        for cyc in cycles:
            entries = [int(tok) for tok in cyc.split()]
            if len(set(entries)) != len(entries):
                raise ValueError(f"repeated entry in cycle ({cyc})")
            if any(not 1 <= e <= n for e in entries):
                raise ValueError(f"cycle entry out of range for n={n}: ({cyc})")
            for a, b in zip(entries, entries[1:] + entries[:1]):
                img[a - 1] = b
        return cls(tuple(img))


def act_symbol(s: Permutation, q: QuadSymbol) -> QuadSymbol:
    """Entrywise image, canonicalized."""
    if s.n != q.n:
        raise ValueError(f"permutation degree {s.n} differs from symbol ambient {q.n}")
    return canonicalize(QuadSymbol(*(s(e) for e in q.entries), q.n))


def act_element(s: Permutation, x: Element) -> Element:
    """Transport an element through the action.

    The normal-form word of x over {c} union the basis is mapped letter
    by letter: c is fixed, each basis letter goes through act_symbol and
    back into the extension.
    """
    if s.n != x.n:
        raise ValueError(f"permutation degree {s.n} differs from element ambient {x.n}")
    ctx = get_context(x.n)
    out = central(x.n) if x.eps0 else identity(x.n)
    m = x.coeffs
    while m:
        k = (m & -m).bit_length() - 1
        image = act_symbol(s, QuadSymbol(*ctx.basis[k], x.n))
        out = multiply(out, ctx.gen_element(image.entries))
        m &= m - 1
    return out
