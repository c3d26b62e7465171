"""Defining presentations (plain and signed variants) as explicit relator lists.

The plain variant has involutive squares, commutators of pairs sharing at
most 2 letters, and pentagon words; dihedral relations are absorbed by
canonicalizing every letter. The signed variant keeps one representative
per dihedral orbit and rewrites the other orbit members as the
representative raised to a sign, the parity of the rotations and
reversals used to reach it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .symbols import QuadSymbol, canonical_tuple, canonical_tuples, dihedral_orbit

Tuple4 = tuple[int, int, int, int]
Relator = tuple[tuple[int, int], ...]  # (generator index, exponent) letters


@dataclass
class Presentation:
    """Generators plus relators; input to the coset enumerator."""

    variant: str                      # "gamma" | "gamma-hat" | "custom"
    n: int                            # ambient size; 0 for custom presentations
    generators: list[str]
    relators: list[Relator]
    symbols: list[QuadSymbol] | None = field(default=None)

    def __post_init__(self):
        for rel in self.relators:
            for g, e in rel:
                if not 0 <= g < len(self.generators):
                    raise ValueError(f"relator references undeclared generator {g}")
                if e not in (1, -1):
                    raise ValueError(f"exponent must be +-1, got {e}")

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def involutive_generators(self) -> set[int]:
        """Generators g with an explicit square relator g^2."""
        out = set()
        for rel in self.relators:
            if len(rel) == 2 and rel[0][0] == rel[1][0] and rel[0][1] == rel[1][1]:
                out.add(rel[0][0])
        return out


def _relator_key(rel: Relator, involutive: bool) -> Relator:
    """Canonical form under cyclic rotation and formal inversion."""
    if involutive:
        inv = tuple(rel[::-1])
    else:
        inv = tuple((g, -e) for g, e in rel[::-1])
    candidates = []
    for w in (tuple(rel), inv):
        for s in range(len(w)):
            candidates.append(w[s:] + w[:s])
    return min(candidates)


def dedup_relators(relators: list[Relator], involutive: bool) -> list[Relator]:
    seen = set()
    out = []
    for rel in relators:
        key = _relator_key(rel, involutive)
        if key not in seen:
            seen.add(key)
            out.append(rel)
    return out


def _pentagon_tuples(n: int):
    return permutations(range(1, n + 1), 5)


def pentagon_letters(i, j, k, l, m) -> list[Tuple4]:
    """The five letters of the pentagon word for the ordered tuple (i,j,k,l,m)."""
    return [(i, j, k, l), (i, j, l, m), (j, k, l, m), (i, j, k, m), (i, k, l, m)]


def build_gamma(n: int) -> Presentation:
    """The plain presentation over the canonical symbols."""
    gens = canonical_tuples(n)
    index = {t: g for g, t in enumerate(gens)}
    sets = [set(t) for t in gens]
    relators: list[Relator] = []
    for g in range(len(gens)):
        relators.append(((g, 1), (g, 1)))
    for a, b in combinations(range(len(gens)), 2):
        if len(sets[a] & sets[b]) <= 2:
            relators.append(((a, 1), (b, 1), (a, 1), (b, 1)))
    for tup in _pentagon_tuples(n):
        rel = tuple((index[canonical_tuple(t)], 1) for t in pentagon_letters(*tup))
        relators.append(rel)
    relators = dedup_relators(relators, involutive=True)
    return Presentation(
        variant="gamma",
        n=n,
        generators=[f"g{g + 1}" for g in range(len(gens))],
        relators=relators,
        symbols=[QuadSymbol(*t, n) for t in gens],
    )


def signed_rewrite(t: Tuple4) -> tuple[Tuple4, int]:
    """Rewrite an arbitrary symbol as (canonical orbit representative, sign).

    Each rotation and each reversal contributes a sign flip; the parity
    map is a homomorphism of the dihedral group, so the sign is
    well-defined and the rewriting is involutive.
    """
    rep = canonical_tuple(t)
    for s in range(4):
        rot = rep[s:] + rep[:s]
        sign = -1 if s % 2 else 1
        if rot == t:
            return rep, sign
        if rot[::-1] == t:
            return rep, -sign
    raise AssertionError(f"{t} not in the dihedral orbit of {rep}")


def build_gamma_hat(n: int) -> Presentation:
    """The signed presentation: commutators, signed pentagons, signed dihedral
    relations absorbed by orbit-representative rewriting (no squares)."""
    gens = canonical_tuples(n)
    index = {t: g for g, t in enumerate(gens)}
    sets = [set(t) for t in gens]
    relators: list[Relator] = []
    for a, b in combinations(range(len(gens)), 2):
        if len(sets[a] & sets[b]) <= 2:
            relators.append(((a, 1), (b, 1), (a, -1), (b, -1)))

    def letter(t: Tuple4, exp: int) -> tuple[int, int]:
        rep, sign = signed_rewrite(t)
        return index[rep], sign * exp

    for tup in _pentagon_tuples(n):
        x1, x2, x3, x4, x5 = pentagon_letters(*tup)
        rel = (letter(x1, 1), letter(x2, 1), letter(x3, 1),
               letter(x4, -1), letter(x5, -1))
        relators.append(rel)
    relators = dedup_relators(relators, involutive=False)
    return Presentation(
        variant="gamma-hat",
        n=n,
        generators=[f"g{g + 1}" for g in range(len(gens))],
        relators=relators,
        symbols=[QuadSymbol(*t, n) for t in gens],
    )


def abelianize(p: Presentation) -> Presentation:
    """Add a commutator relator for every generator pair."""
    relators = list(p.relators)
    for a, b in combinations(range(p.ngens), 2):
        relators.append(((a, 1), (b, 1), (a, -1), (b, -1)))
    return Presentation(
        variant="custom",
        n=p.n,
        generators=list(p.generators),
        relators=relators,
        symbols=p.symbols,
    )


def serialize(p: Presentation) -> str:
    """Deterministic text form; round-trips byte-exactly through parse."""
    lines = [f"{p.variant} n={p.n} gens={p.ngens} rels={len(p.relators)}"]
    for g, name in enumerate(p.generators):
        if p.symbols is not None:
            lines.append(f"{name} = {p.symbols[g]}")
        else:
            lines.append(f"g{g + 1} = {name}")
    for rel in p.relators:
        lines.append(" ".join(
            f"g{g + 1}" if e == 1 else f"g{g + 1}^-1" for g, e in rel))
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    lines = text.splitlines()
    header = lines[0].split()
    variant = header[0]
    fields = dict(part.split("=") for part in header[1:])
    n, ngens, nrels = int(fields["n"]), int(fields["gens"]), int(fields["rels"])
    symbols: list[QuadSymbol] | None = [] if variant in ("gamma", "gamma-hat") else None
    generators = []
    for line in lines[1:1 + ngens]:
        name, _, rhs = line.partition(" = ")
        if symbols is not None:
            generators.append(name)
            from .symbols import parse_symbol
            symbols.append(parse_symbol(rhs, n))
        else:
            generators.append(rhs)
    relators: list[Relator] = []
    for line in lines[1 + ngens:1 + ngens + nrels]:
        rel = []
        for token in line.split():
            if token.endswith("^-1"):
                rel.append((int(token[1:-3]) - 1, -1))
            else:
                rel.append((int(token[1:]) - 1, 1))
        relators.append(tuple(rel))
    return Presentation(variant=variant, n=n, generators=generators,
                        relators=relators, symbols=symbols)
