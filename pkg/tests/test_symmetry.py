import math
import random

import pytest

from quadgroup.normal_form import Element, central, gen, identity, multiply
from quadgroup.symbols import QuadSymbol, canonicalize
from quadgroup.symmetry import Permutation, act_element, act_symbol


def test_permutation_basics():
    s = Permutation.from_cycles("(1 2)(5 6)", 6)
    assert s(1) == 2 and s(2) == 1 and s(5) == 6 and s(3) == 3
    assert (s * s) == Permutation.identity(6)
    assert s.inverse() == s
    t = Permutation.from_cycles("(1 2 3)", 6)
    assert (t * t * t) == Permutation.identity(6)
    assert t.inverse()(1) == 3


def test_act_symbol_canonicalizes():
    s = Permutation.from_cycles("(1 6)", 6)
    q = act_symbol(s, QuadSymbol(1, 2, 3, 4, 6))
    assert q.is_canonical
    assert q.underlying_set == frozenset({6, 2, 3, 4})


def test_action_fixes_central():
    rng = random.Random(1)
    for _ in range(50):
        n = 6
        images = list(range(1, n + 1))
        rng.shuffle(images)
        s = Permutation(tuple(images))
        assert act_element(s, central(n)) == central(n)
        assert act_element(s, identity(n)) == identity(n)


def test_action_is_homomorphism_random():
    rng = random.Random(42)
    n = 6
    nbits = math.comb(n, 3) - 1
    for _ in range(1500):
        images = list(range(1, n + 1))
        rng.shuffle(images)
        s = Permutation(tuple(images))
        x = Element(n, rng.getrandbits(1), rng.getrandbits(nbits))
        y = Element(n, rng.getrandbits(1), rng.getrandbits(nbits))
        assert act_element(s, multiply(x, y)) == \
            multiply(act_element(s, x), act_element(s, y))


def test_action_on_generators_matches_entrywise():
    rng = random.Random(8)
    n = 7
    for _ in range(300):
        images = list(range(1, n + 1))
        rng.shuffle(images)
        s = Permutation(tuple(images))
        t = tuple(rng.sample(range(1, n + 1), 4))
        q = canonicalize(QuadSymbol(*t, n))
        moved = canonicalize(QuadSymbol(*(s(i) for i in t), n))
        assert act_element(s, gen(q)) == gen(moved)


def test_composition_convention():
    # (s * t)(i) == s(t(i))
    s = Permutation.from_cycles("(1 2)", 4)
    t = Permutation.from_cycles("(2 3)", 4)
    assert (s * t)(3) == 1
    assert (t * s)(3) == 2
    assert (t * s)(1) == 3
