"""Release gate: one pass/fail line per criterion, with time budgets.

Each test exercises one acceptance criterion and records a single line in
the terminal summary (see conftest.pytest_terminal_summary). A criterion
fails if its check fails or its time budget is exceeded.
"""

import math
import random
import time

import pytest

from quadgroup.enumeration import EnumerationConfig, enumerate_cosets, verify_table
from quadgroup.homology import abelianization_rank, lambda_coordinates
from quadgroup.normal_form import (Element, central, commutator, decompose,
                                   element_order, evaluate, gen, get_context,
                                   identity, image_order, inverse,
                                   lambda_basis, multiply)
from quadgroup.presentation import abelianize, build_gamma
from quadgroup.symbols import QuadSymbol, enumerate_canonical
from quadgroup.symmetry import Permutation, act_element
from quadgroup.verification import verify_commutator_classes, verify_relations
from quadgroup.words import parse_word

from conftest import ACCEPTANCE_LINES
from test_enumeration import Q8, S3, quaternion_order_bruteforce


def _criterion(num, desc, budget, check):
    t0 = time.perf_counter()
    try:
        check()
        ok = True
        detail = ""
    except AssertionError as exc:
        ok = False
        detail = f" ({exc})"
    dt = time.perf_counter() - t0
    if dt > budget:
        ok = False
        detail += f" (over {budget}s budget)"
    verdict = "PASS" if ok else "FAIL"
    ACCEPTANCE_LINES.append(
        f"{verdict} criterion {num:2d}: {desc} [{dt:.2f}s / {budget}s]{detail}")
    assert ok, f"criterion {num}: {desc}{detail}"


def test_criterion_01_generator_counts():
    def check():
        for n in range(4, 13):
            expect = n * (n - 1) * (n - 2) * (n - 3) // 8
            assert len(enumerate_canonical(n)) == expect
            assert len(lambda_basis(n)) == math.comb(n, 3) - 1
    _criterion(1, "generator and basis counts for 4 <= n <= 12", 1.0, check)


def test_criterion_02_abelianization():
    def check():
        for n in range(4, 13):
            assert abelianization_rank(n) == math.comb(n, 3) - 1
        assert 2 ** abelianization_rank(6) == 524288
    _criterion(2, "GF(2) abelianization rank C(n,3)-1; order 2^19 at n=6",
               5.0, check)


def test_criterion_03_relation_sweep():
    def check():
        for n in range(4, 12):
            report = verify_relations(n)
            assert not report.failures, f"n={n}: {len(report.failures)} failures"
    _criterion(3, "all relator families hold in the image for 4 <= n <= 11",
               60.0, check)


def test_criterion_04_commutator_classes():
    def check():
        x = gen(QuadSymbol(1, 2, 3, 4, 6))
        y = gen(QuadSymbol(1, 2, 3, 5, 6))
        assert commutator(x, y) == central(6)
        for n in range(6, 10):
            report = verify_commutator_classes(n)
            assert not report.failures, f"n={n}: {len(report.failures)} failures"
    _criterion(4, "commutators sorted by shared letters, central witness",
               60.0, check)


def test_criterion_05_pentagon_tables():
    def check():
        from quadgroup.verification import verify_pentagon_tables
        report = verify_pentagon_tables()
        assert not report.failures
    _criterion(5, "twelve pentagon case tables reproduced and row sums zero",
               5.0, check)


def test_criterion_06_image_order():
    def check():
        assert image_order(6) == 1048576 == 2 ** 20
        for n in range(6, 11):
            assert image_order(n) == 2 ** math.comb(n, 3)
    _criterion(6, "image order 2^C(n,3) for 6 <= n <= 10", 5.0, check)


def test_criterion_07_enumeration_small_suite():
    # compile the jitted table core outside the timed region
    for strategy in ("relator-driven", "definition-driven"):
        enumerate_cosets(S3, (), EnumerationConfig(strategy=strategy))

    def check():
        r = enumerate_cosets(S3, ())
        assert r.index == 6 and verify_table(r.table)
        assert quaternion_order_bruteforce() == 8
        r = enumerate_cosets(Q8, ())
        assert r.index == 8 and verify_table(r.table)
        cfg = EnumerationConfig(strategy="definition-driven")
        # the enumerator consistency-checks the closed table itself
        r = enumerate_cosets(abelianize(build_gamma(6)), (), cfg)
        assert r.index == 524288
    _criterion(7, "coset enumeration: order 6, order 8 vs oracle, 524288",
               300.0, check)


@pytest.mark.slow
def test_criterion_08_enumeration_flagship():
    def check():
        cfg = EnumerationConfig(strategy="definition-driven",
                                max_cosets=1 << 26, max_memory=8 << 30)
        r = enumerate_cosets(build_gamma(6), (), cfg)
        assert r.index == 1048576, f"index {r.index}"
        assert verify_table(r.table)
    _criterion(8, "flagship enumeration closes at 1048576 live cosets",
               3600.0, check)


def test_criterion_09_infinite_group_guard():
    def check():
        cfg = EnumerationConfig(max_cosets=10 ** 6)
        r = enumerate_cosets(build_gamma(4), (), cfg)
        assert r.status == "limit-exceeded" and r.index is None
    _criterion(9, "n=4 enumeration reports LimitExceeded, never an index",
               60.0, check)


def test_criterion_10_cross_module_oracle():
    def check():
        for n in range(4, 12):
            for q in enumerate_canonical(n):
                _, idx = decompose(q)
                mask = 0
                for i in idx:
                    mask |= 1 << (i - 1)
                assert lambda_coordinates(q) == mask, q
    _criterion(10, "homology coordinates match basis decomposition, n <= 11",
               30.0, check)


def test_criterion_11_property_suites():
    def check():
        rng = random.Random(20260826)
        n = 7
        nbits = math.comb(n, 3) - 1
        rand_el = lambda: Element(n, rng.getrandbits(1), rng.getrandbits(nbits))

        for _ in range(10 ** 4):
            x, y, z = rand_el(), rand_el(), rand_el()
            assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))

        for _ in range(10 ** 4):
            x = rand_el()
            assert multiply(x, inverse(x)) == identity(n)
            assert multiply(inverse(x), x) == identity(n)

        for _ in range(10 ** 4):
            images = list(range(1, n + 1))
            rng.shuffle(images)
            s = Permutation(tuple(images))
            x, y = rand_el(), rand_el()
            assert act_element(s, multiply(x, y)) == \
                multiply(act_element(s, x), act_element(s, y))
            assert act_element(s, central(n)) == central(n)

        for _ in range(10 ** 4):
            x = rand_el()
            assert element_order(x) in (1, 2, 4)
        w = parse_word("(1 2 3 4)(1 2 3 5)", 6)
        x = evaluate(w, 6)
        assert element_order(x) == 4
        assert multiply(x, x) == central(6)
    _criterion(11, "randomized suites: associativity, inverses, symmetry "
               "action, orders in {1,2,4}", 60.0, check)
