"""Exhaustive machine checks of every relation family and of the twelve
pentagon case tables, producing pass/fail sweep reports."""

from __future__ import annotations

import json
import random
import re
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .gf2 import parity
from .normal_form import get_context
from .presentation import pentagon_letters
from .symbols import canonical_tuple, classify_tuple, format_symbol

ALL_FAMILIES = ("involutive", "commutative", "pentagon")


@dataclass
class SweepReport:
    family: str
    n: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        return json.dumps({
            "family": self.family,
            "n": self.n,
            "checked": self.checked,
            "failures": sorted(self.failures),
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
        })


def _word_image(ctx, tuples):
    """(eps, coeffs) of a product of canonical generator images."""
    e, a, b = 0, 0, 0
    for t in tuples:
        ge, ga, gb = ctx.gen_data[t]
        e ^= ge ^ parity(b & ga)
        a ^= ga
        b ^= gb
    return e, a


def verify_relations(n: int, families=ALL_FAMILIES) -> SweepReport:
    """Evaluate every relator instance of the selected families; pass iff
    every instance maps to the identity."""
    start = time.perf_counter()
    ctx = get_context(n)
    report = SweepReport(family="+".join(families), n=n)
    if "involutive" in families:
        for t in ctx.canonical:
            report.checked += 1
            if _word_image(ctx, (t, t)) != (0, 0):
                report.failures.append(f"{format_symbol(t)}^2")
    if "commutative" in families:
        sets = [set(t) for t in ctx.canonical]
        for a, b in combinations(range(len(ctx.canonical)), 2):
            if len(sets[a] & sets[b]) > 2:
                continue
            report.checked += 1
            t, u = ctx.canonical[a], ctx.canonical[b]
            if _word_image(ctx, (t, u, t, u)) != (0, 0):
                report.failures.append(f"[{format_symbol(t)},{format_symbol(u)}]")
    if "pentagon" in families:
        for tup in permutations(range(1, n + 1), 5):
            report.checked += 1
            letters = [canonical_tuple(t) for t in pentagon_letters(*tup)]
            if _word_image(ctx, letters) != (0, 0):
                report.failures.append(f"pentagon{tup}")
    report.seconds = time.perf_counter() - start
    return report


def verify_commutator_classes(n: int) -> SweepReport:
    """Commutators by shared-letter count over all ordered generator pairs:
    central for 3 shared letters, trivial otherwise."""
    if n < 6:
        raise ValueError(f"commutator classification is faithful only for n >= 6, got {n}")
    start = time.perf_counter()
    ctx = get_context(n)
    report = SweepReport(family="commutator-classes", n=n)
    data = [(set(t), *ctx.gen_data[t], t) for t in ctx.canonical]
    for sx, ex, ax, bx, t in data:
        for sy, ey, ay, by, u in data:
            if t == u:
                continue
            report.checked += 1
            shared = len(sx & sy)
            comm = parity(bx & ay) ^ parity(by & ax)
            expected = 1 if shared == 3 else 0
            if comm != expected:
                report.failures.append(
                    f"[{format_symbol(t)},{format_symbol(u)}] shared={shared}")
    report.seconds = time.perf_counter() - start
    return report


def verify_center_candidates(n: int) -> SweepReport:
    """Products of shared-4 pairs commute with every generator image."""
    if n < 6:
        raise ValueError(f"need n >= 6, got {n}")
    start = time.perf_counter()
    ctx = get_context(n)
    report = SweepReport(family="center-candidates", n=n)
    gens = ctx.canonical
    sets = [set(t) for t in gens]
    for a, b in combinations(range(len(gens)), 2):
        if len(sets[a] & sets[b]) != 4:
            continue
        _, av, _ = ctx.gen_data[gens[a]]
        _, bv, _ = ctx.gen_data[gens[b]]
        prod = av ^ bv
        prod_row = ctx.form_row(prod)
        for t in gens:
            report.checked += 1
            _, gv, grow = ctx.gen_data[t]
            if parity(prod_row & gv) ^ parity(grow & prod):
                report.failures.append(
                    f"{format_symbol(gens[a])}{format_symbol(gens[b])} vs {format_symbol(t)}")
    report.seconds = time.perf_counter() - start
    return report


# The twelve pentagon case tables: for each arrangement of five indices
# i < j < k < l < m, every row gives the type tags of the five letters and
# the four form values x1.x2, x1.x3, x2.x3, x5.x4. The central bits follow
# from the tags; each row must sum to zero.
PENTAGON_TABLES = [
    ("ijklm", [
        ("i=1 j=2 k=3", "G1 A1 A3 G1 A2", "0 0 1 1"),
        ("i=1 j=2 k>=4", "A1 A1 A3 A1 A2", "0 0 1 1"),
        ("i=1 j>=3", "A2 A2 A4 A2 A2", "0 0 0 1"),
        ("i=2", "A3 A3 A4 A3 A3", "1 0 1 1"),
        ("i>=3", "A4 A4 A4 A4 A4", "0 1 0 0"),
    ]),
    ("ijkml", [
        ("i=1 j=2 k=3", "G1 G3 B1 G1 G3", "0 1 0 1"),
        ("i=1 j=2 k>=4", "A1 G3 B2 A1 G3", "0 1 0 1"),
        ("i=1 j>=3", "A2 G3 B3 A2 G3", "0 1 0 1"),
        ("i=2 j=3", "A3 B1 B3 A3 B2", "0 0 1 1"),
        ("i=2 j>=4", "A3 B2 B3 A3 B2", "0 0 1 1"),
        ("i>=3", "A4 B3 B3 A4 B3", "1 0 0 1"),
    ]),
    ("ijlkm", [
        ("i=1 j=2 k=3", "G3 G1 C3 A1 C1", "0 0 1 1"),
        ("i=1 j=2 k>=4", "G3 A1 C3 A1 C2", "0 0 1 1"),
        ("i=1 j=3", "G3 A2 C4 A2 C2", "0 1 0 0"),
        ("i=1 j>=4", "G3 A2 C5 A2 C2", "0 1 0 0"),
        ("i=2 j=3", "B1 A3 C4 A3 C3", "1 0 0 0"),
        ("i=2 j>=4", "B2 A3 C5 A3 C3", "1 0 0 0"),
        ("i=3", "B3 A4 C5 A4 C4", "1 1 1 1"),
        ("i>=4", "B3 A4 C5 A4 C5", "1 1 1 1"),
    ]),
    ("ijlmk", [
        ("i=1 j=2 k=3", "A1 G3 B1 G3 G3", "1 0 1 1"),
        ("i=1 j=2 k>=4", "A1 G3 B2 G3 G3", "1 0 1 1"),
        ("i=1 j>=3", "A2 G3 B3 G3 G3", "1 0 1 1"),
        ("i=2 j=3", "A3 B1 B3 B1 B2", "1 1 0 0"),
        ("i=2 j>=4", "A3 B2 B3 B2 B2", "1 1 0 0"),
        ("i>=3", "A4 B3 B3 B3 B3", "0 0 1 0"),
    ]),
    ("ijmkl", [
        ("i=1 j=2 k=3", "G3 G1 C3 G3 C1", "1 1 0 1"),
        ("i=1 j=2 k>=4", "G3 A1 C3 G3 C2", "1 1 0 1"),
        ("i=1 j=3", "G3 A2 C4 G3 C2", "1 1 0 0"),
        ("i=1 j>=4", "G3 A2 C5 G3 C2", "1 1 0 0"),
        ("i=2 j=3", "B1 A3 C4 B1 C3", "0 1 1 1"),
        ("i=2 j>=4", "B2 A3 C5 B2 C3", "0 1 1 1"),
        ("i=3", "B3 A4 C5 B3 C4", "0 0 1 0"),
        ("i>=4", "B3 A4 C5 B3 C5", "0 0 1 0"),
    ]),
    ("ijmlk", [
        ("i=1 j=2 k=3", "G3 G3 A3 G3 A2", "1 1 0 1"),
        ("i=1 j>=3", "G3 G3 A4 G3 A2", "1 0 1 0"),
        ("i=2 j=3", "B1 B1 A4 B1 A3", "1 1 1 0"),
        ("i=2 j>=4", "B2 B2 A4 B2 A3", "1 1 1 0"),
        ("i>=3", "B3 B3 A4 B3 A4", "1 0 1 0"),
    ]),
    ("ikjlm", [
        ("i=1 j=2 k=3", "G2 A2 B1 G2 A1", "0 0 0 0"),
        ("i=1 j=2 k>=4", "G2 A2 B2 G2 A1", "0 0 0 0"),
        ("i=1 j=3", "C1 A2 B3 C1 A2", "1 0 1 0"),
        ("i=1 j>=4", "C2 A2 B3 C2 A2", "1 0 1 0"),
        ("i=2", "C3 A3 B3 C3 A3", "0 1 0 1"),
        ("i=3", "C4 A4 B3 C4 A4", "0 1 1 0"),
        ("i>=4", "C5 A4 B3 C5 A4", "0 1 1 0"),
    ]),
    ("ikjml", [
        ("i=1 j=2", "G2 G3 A3 G2 G3", "0 0 1 1"),
        ("i=1 j=3", "C1 G3 A4 C1 G3", "0 1 1 1"),
        ("i=1 j>=4", "C2 G3 A4 C2 G3", "0 1 1 1"),
        ("i=2 j=3", "C3 B2 A4 C3 B1", "1 1 0 1"),
        ("i=2 j>=4", "C3 B2 A4 C3 B2", "1 1 0 1"),
        ("i=3", "C4 B3 A4 C4 B3", "0 0 1 0"),
        ("i>=4", "C5 B3 A4 C5 B3", "0 0 1 0"),
    ]),
    ("ikljm", [
        ("i=1 j=2", "G3 G2 C3 A2 G2", "0 0 1 1"),
        ("i=1 j=3", "G3 C1 C4 A2 C1", "0 1 1 1"),
        ("i=1 j>=4", "G3 C2 C5 A2 C2", "0 1 1 1"),
        ("i=2 j=3", "B1 C3 C4 A3 C3", "1 0 1 0"),
        ("i=2 j>=4", "B2 C3 C5 A3 C3", "1 0 1 0"),
        ("i=3", "B3 C4 C5 A4 C4", "1 1 1 0"),
        ("i>=4", "B3 C5 C5 A4 C5", "1 1 1 0"),
    ]),
    ("ikmjl", [
        ("i=1 j=2", "G3 G2 C3 G3 G2", "1 1 0 1"),
        ("i=1 j=3", "G3 C1 C4 G3 C1", "1 1 1 1"),
        ("i=1 j>=4", "G3 C2 C5 G3 C2", "1 1 1 1"),
        ("i=2 j=3", "B1 C3 C4 B2 C3", "0 1 0 1"),
        ("i=2 j>=4", "B2 C3 C5 B2 C3", "0 1 0 1"),
        ("i=3", "B3 C4 C5 B3 C4", "0 0 1 1"),
        ("i>=4", "B3 C5 C5 B3 C5", "0 0 1 1"),
    ]),
    ("iljkm", [
        ("i=1 j=2 k=3", "G2 C1 B1 G2 G1", "0 0 0 0"),
        ("i=1 j=2 k>=4", "G2 C2 B2 G2 A1", "0 0 0 0"),
        ("i=1 j=3", "C1 C2 B3 C1 A2", "1 0 0 1"),
        ("i=1 j>=4", "C2 C2 B3 C2 A2", "1 0 0 1"),
        ("i=2", "C3 C3 B3 C3 A3", "0 1 1 1"),
        ("i=3", "C4 C4 B3 C4 A4", "0 1 1 1"),
        ("i>=4", "C5 C5 B3 C5 A4", "0 1 1 1"),
    ]),
    ("ilkjm", [
        ("i=1 j=2 k=3", "G1 G2 A3 C1 G2", "0 0 1 1"),
        ("i=1 j=2 k>=4", "A1 G2 A3 C2 G2", "0 0 1 1"),
        ("i=1 j=3", "A2 C1 A4 C2 C1", "0 0 0 1"),
        ("i=1 j>=4", "A2 C2 A4 C2 C2", "0 0 0 1"),
        ("i=2", "A3 C3 A4 C3 C3", "1 0 1 0"),
        ("i=3", "A4 C4 A4 C4 C4", "1 1 1 1"),
        ("i>=4", "A4 C5 A4 C5 C5", "1 1 1 1"),
    ]),
]

_EPS_CLASSES = {"A1", "A2", "A4", "C2", "C3"}


def _row_condition(cond: str):
    """Parse "i=1 j=2 k>=4" into a predicate on (i, j, k)."""
    clauses = []
    for part in cond.split():
        var, op, val = re.match(r"([ijk])(>?=)(\d+)", part).groups()
        clauses.append((var, op, int(val)))
    def pred(i, j, k):
        env = {"i": i, "j": j, "k": k}
        return all(env[v] >= x if op == ">=" else env[v] == x
                   for v, op, x in clauses)
    return pred


def _admissible_tuples(cond: str, n: int):
    pred = _row_condition(cond)
    for tup in combinations(range(1, n + 1), 5):
        if pred(tup[0], tup[1], tup[2]):
            yield tup


def _check_table_row(ctx, arrangement: str, tup, types, circs):
    """Recompute one table row at a concrete 5-tuple; return failure strings."""
    i, j, k, l, m = tup
    env = {"i": i, "j": j, "k": k, "l": l, "m": m}
    s, t, u, v, w = (env[ch] for ch in arrangement)
    raw = pentagon_letters(s, t, u, v, w)
    xs = [canonical_tuple(x) for x in raw]
    failures = []
    eps_sum = 0
    for pos, (x, want) in enumerate(zip(xs, types), start=1):
        got = classify_tuple(x).value
        if got != want:
            failures.append(
                f"{arrangement}{tup} x{pos}={format_symbol(x)}: type {got} != {want}")
        eps_sum ^= 1 if got in _EPS_CLASSES else 0
    data = [ctx.gen_data[x] for x in xs]
    pairs = ((0, 1), (0, 2), (1, 2), (4, 3))
    circ_sum = 0
    for (a, b), want in zip(pairs, circs):
        got = parity(data[a][2] & data[b][1])
        circ_sum ^= got
        if got != want:
            failures.append(
                f"{arrangement}{tup} x{a + 1}.x{b + 1}: {got} != {want}")
    if (eps_sum ^ circ_sum) != 0:
        failures.append(f"{arrangement}{tup}: row sum nonzero")
    return failures


def verify_pentagon_tables(n: int = 12, samples: int = 5, seed: int = 0) -> SweepReport:
    """Recompute type tags, central bits and form values for every row of the
    twelve pentagon tables: the smallest admissible instantiation plus
    random admissible ones."""
    start = time.perf_counter()
    ctx = get_context(n)
    rng = random.Random(seed)
    report = SweepReport(family="pentagon-tables", n=n)
    for table_no, (arrangement, rows) in enumerate(PENTAGON_TABLES, start=1):
        for cond, types_s, circs_s in rows:
            types = types_s.split()
            circs = [int(x) for x in circs_s.split()]
            admissible = list(_admissible_tuples(cond, n))
            assert admissible, f"table {table_no} row {cond!r} has no instances"
            chosen = [admissible[0]] + rng.sample(
                admissible, min(samples, len(admissible)))
            for tup in chosen:
                report.checked += 1
                for fail in _check_table_row(ctx, arrangement, tup, types, circs):
                    report.failures.append(f"table {table_no} row {cond}: {fail}")
    report.seconds = time.perf_counter() - start
    return report
