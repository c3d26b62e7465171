import math

import pytest

from quadgroup.gf2 import Gf2Solver, gf2_rank, parity
from quadgroup.homology import (SubsetVector, abelianization_rank,
                                lambda_coordinates, phi2, phi3, subset_rank,
                                subsets_colex)
from quadgroup.normal_form import decompose, get_context
from quadgroup.symbols import QuadSymbol, canonicalize


def test_parity_and_rank():
    assert parity(0) == 0
    assert parity(0b1011) == 1
    assert gf2_rank([]) == 0
    assert gf2_rank([0b11, 0b01, 0b10]) == 2
    assert gf2_rank([1, 2, 4]) == 3


def test_gf2_solver_solves_and_rejects():
    solver = Gf2Solver([0b011, 0b110])
    mask = solver.solve(0b101)
    assert mask == 0b11
    with pytest.raises(ValueError):
        solver.solve(0b001)
    with pytest.raises(ValueError):
        Gf2Solver([0b011, 0b110, 0b101])


def test_subset_rank_colex():
    # colexicographic: rank of {x1<...<xk} = sum C(xi-1, i)
    assert subset_rank((1, 2, 3)) == 0
    assert subset_rank((1, 2, 4)) == 1
    for n, k in ((6, 3), (7, 2)):
        subs = subsets_colex(n, k)
        assert len(subs) == math.comb(n, k)
        assert [subset_rank(s) for s in subs] == list(range(len(subs)))


def test_phi3_is_the_four_triples():
    q = QuadSymbol(1, 2, 3, 4, 6)
    v = phi3(q)
    assert sorted(v.support()) == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]


def test_phi2_is_the_diagonals():
    q = QuadSymbol(1, 2, 3, 4, 6)
    assert sorted(phi2(q).support()) == [(1, 3), (2, 4)]
    q = QuadSymbol(1, 3, 2, 4, 6)
    assert sorted(phi2(q).support()) == [(1, 2), (3, 4)]


def test_phi_respects_dihedral_moves():
    q = QuadSymbol(2, 3, 4, 1, 6)
    c = canonicalize(q)
    assert phi3(q).bits == phi3(c).bits
    assert phi2(q).bits == phi2(c).bits


def test_subset_vector_addition():
    a = SubsetVector(6, 2, 0b011)
    b = SubsetVector(6, 2, 0b110)
    assert (a + b).bits == 0b101
    with pytest.raises(ValueError):
        a + SubsetVector(6, 3, 0b1)


def test_abelianization_rank_closed_form():
    for n in range(4, 13):
        assert abelianization_rank(n) == math.comb(n, 3) - 1


def test_h1_order_at_n6():
    assert 2 ** abelianization_rank(6) == 524288


def test_lambda_coordinates_against_decomposition():
    for n in range(4, 9):
        ctx = get_context(n)
        for t in ctx.canonical:
            q = QuadSymbol(*t, n)
            _, idx = decompose(q)
            mask = 0
            for i in idx:
                mask |= 1 << (i - 1)
            assert lambda_coordinates(q) == mask
