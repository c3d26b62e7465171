"""Coset enumerator tests against independent oracles."""

import numpy as np
import pytest

from quadgroup.enumeration import (Closed, CosetTable, EnumerationConfig,
                                   LimitExceeded, enumerate_cosets,
                                   verify_table)
from quadgroup.presentation import Presentation, abelianize, build_gamma

S3 = Presentation("custom", 0, ["a", "b"],
                  [((0, 1), (0, 1)), ((1, 1), (1, 1)),
                   ((0, 1), (1, 1)) * 3])
Q8 = Presentation("custom", 0, ["a", "b"],
                  [((0, 1),) * 4,
                   ((0, 1), (0, 1), (1, -1), (1, -1)),
                   ((1, -1), (0, 1), (1, 1), (0, 1))])

STRATEGIES = ("relator-driven", "definition-driven")


def quaternion_order_bruteforce():
    """Close {a, b} under explicit unit-quaternion multiplication."""
    def mul(p, q):
        a1, b1, c1, d1 = p
        a2, b2, c2, d2 = q
        return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)
    i = (0, 1, 0, 0)
    j = (0, 0, 1, 0)
    # sanity: the presentation's relators hold for a=i, b=j
    i2 = mul(i, i)
    assert mul(i2, i2) == (1, 0, 0, 0)                      # a^4
    assert mul(i, i) == mul(j, j)                           # a^2 = b^2
    jinv = (0, 0, -1, 0)
    assert mul(mul(mul(jinv, i), j), i) == (1, 0, 0, 0)     # b^-1 a b a
    elems = {(1, 0, 0, 0)}
    frontier = [(1, 0, 0, 0)]
    while frontier:
        x = frontier.pop()
        for g in (i, j):
            y = mul(x, g)
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return len(elems)


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_s3(strategy):
    r = enumerate_cosets(S3, (), EnumerationConfig(strategy=strategy))
    assert isinstance(r, Closed) and r.index == 6
    assert verify_table(r.table)


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_quaternion_vs_bruteforce_oracle(strategy):
    want = quaternion_order_bruteforce()
    assert want == 8
    r = enumerate_cosets(Q8, (), EnumerationConfig(strategy=strategy))
    assert isinstance(r, Closed) and r.index == want
    assert verify_table(r.table)


def test_subgroup_index():
    r = enumerate_cosets(S3, [((0, 1),)])
    assert r.index == 3
    r = enumerate_cosets(S3, [((0, 1), (1, 1))])
    assert r.index == 2
    r = enumerate_cosets(S3, [((0, 1),), ((1, 1),)])
    assert r.index == 1


def test_table_action_and_trace():
    r = enumerate_cosets(S3, ())
    t = r.table
    assert t.index == 6
    # generators act as permutations
    for g in (0, 1):
        col = sorted(t.act(c, g) for c in range(6))
        assert col == list(range(6))
    assert t.trace(0, [(0, 1), (1, 1), (0, 1), (1, 1), (0, 1), (1, 1)]) == 0


def test_verify_table_negative_control():
    r = enumerate_cosets(S3, ())
    t = r.table
    assert verify_table(t)
    corrupted = CosetTable(t.presentation,
                           t.table.copy(), t.columns, t.invcol)
    a, b = int(corrupted.table[2, 0]), int(corrupted.table[3, 0])
    if a == b:
        corrupted.table[2, 0] = (a + 1) % corrupted.index
    else:
        corrupted.table[2, 0] = b
        corrupted.table[3, 0] = a
    assert not verify_table(corrupted)


@pytest.mark.parametrize("cap", (100, 10_000, 1_000_000))
def test_gamma4_limit_exceeded(cap):
    r = enumerate_cosets(build_gamma(4), (),
                         EnumerationConfig(max_cosets=cap))
    assert isinstance(r, LimitExceeded)
    assert r.index is None
    assert r.defined >= min(cap, 100)


def test_gamma4_limit_exceeded_with_lookahead_and_felsch():
    for cfg in (EnumerationConfig(max_cosets=20_000, lookahead=True),
                EnumerationConfig(max_cosets=20_000,
                                  strategy="definition-driven")):
        r = enumerate_cosets(build_gamma(4), (), cfg)
        assert isinstance(r, LimitExceeded)


def test_memory_guard_reports_limit():
    cfg = EnumerationConfig(max_memory=1 << 16)
    r = enumerate_cosets(build_gamma(4), (), cfg)
    assert isinstance(r, LimitExceeded)


def test_growth_from_tiny_table():
    # start with a 16-row table so the grow-and-resume path is exercised
    cfg = EnumerationConfig(initial_rows=2)
    r = enumerate_cosets(abelianize(build_gamma(5)), (), cfg)
    assert r.index == 2 ** 9


def test_gamma5_subgroup_of_commuting_generators():
    # the three generators on {1,2,3,4} generate a quotient of the n=4
    # group inside the n=5 group; enumerating over them must not close
    p = build_gamma(5)
    sub = [((g, 1),) for g, s in enumerate(p.symbols)
           if s.underlying_set == frozenset({1, 2, 3, 4})]
    assert len(sub) == 3
    r = enumerate_cosets(p, sub, EnumerationConfig(max_cosets=50_000))
    assert isinstance(r, LimitExceeded)


def test_abelianized_gamma4_closes():
    # the n=4 group is infinite, its abelianization is (Z/2)^3
    r = enumerate_cosets(abelianize(build_gamma(4)), ())
    assert r.index == 8
    assert verify_table(r.table)


def test_abelianized_gamma5_closes():
    r = enumerate_cosets(abelianize(build_gamma(5)), (),
                         EnumerationConfig(strategy="definition-driven"))
    assert r.index == 2 ** 9
    assert verify_table(r.table)


def test_strategies_agree_on_gamma6_quotients():
    p = abelianize(build_gamma(6))
    sub = [((g, 1),) for g in range(8)]
    results = [enumerate_cosets(p, sub, EnumerationConfig(strategy=s)).index
               for s in STRATEGIES]
    assert results[0] == results[1]


def test_config_validation():
    with pytest.raises(ValueError):
        EnumerationConfig(strategy="magic")
    with pytest.raises(ValueError):
        EnumerationConfig(max_cosets=1)
