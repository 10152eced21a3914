"""Module machinery on the group algebra of Z_7 x| Z_3, where characters give an
independent multiplicity oracle."""
import pytest

from hopfforge.constructors import group_algebra
from hopfforge.groups import semidirect
from hopfforge.reptheory.reps import (RepError, check_module, check_unitary, dual_rep, end_dim,
                                      intertwiners, multiplicity, normalized_integral,
                                      regular_rep, rep_from_generators, tensor_rep)
from hopfforge.scalars import Cyc

N = 21
G = semidirect(7, 3, 2)
A_IDX, B_IDX = 1 * 3 + 0, 0 * 3 + 1


@pytest.fixture(scope="module")
def kg():
    return group_algebra(G, N)


def gens_of(H):
    one = Cyc.one(N)
    return [{A_IDX: one}, {B_IDX: one}]


def linear(H, k):
    w = Cyc.zeta(N, 7 * k)
    return rep_from_generators(H, list(zip(gens_of(H), [[[Cyc.one(N)]], [[w]]])),
                               label=("lin", k), unitary=True)


def three_dim(H, s):
    z = Cyc.zeta(N, 3)  # zeta_7
    a = [[z ** (s * pow(4, k, 7)) if r == k else Cyc.zero(N) for k in range(3)] for r in range(3)]
    b = [[Cyc.one(N) if r == (k + 1) % 3 else Cyc.zero(N) for k in range(3)] for r in range(3)]
    return rep_from_generators(H, list(zip(gens_of(H), [a, b])), label=("3", s), unitary=True)


@pytest.fixture(scope="module")
def irreps(kg):
    return [linear(kg, k) for k in range(3)] + [three_dim(kg, 1), three_dim(kg, 3)]


def char_values(rep):
    return [rep.character_basis(g).to_complex() for g in range(G.order)]


def oracle_multiplicity(S, M):
    cs, cm = char_values(S), char_values(M)
    val = sum(x.conjugate() * y for x, y in zip(cs, cm)) / G.order
    assert abs(val - round(val.real)) < 1e-9
    return round(val.real)


def test_irreps_pass_axioms(irreps):
    assert sum(r.dim ** 2 for r in irreps) == G.order
    for r in irreps:
        assert check_module(r, exhaustive=True).ok
        assert check_unitary(r).ok
        assert end_dim(r) == 1


def test_bad_operator_rejected(kg):
    z = Cyc.zeta(N, 3)
    with pytest.raises(RepError):
        rep_from_generators(kg, list(zip(gens_of(kg), [[[z]], [[Cyc.one(N)]]])))


def test_regular_rep_multiplicities(kg, irreps):
    reg = regular_rep(kg)
    assert check_module(reg).ok
    for S in irreps:
        assert multiplicity(S, reg, method="both") == S.dim == oracle_multiplicity(S, reg)


def test_tensor_products_against_characters(kg, irreps):
    for i, X in enumerate(irreps):
        for Y in irreps[i:]:
            M = tensor_rep(X, Y)
            assert check_module(M).ok
            got = [multiplicity(S, M) for S in irreps]
            assert got == [oracle_multiplicity(S, M) for S in irreps]
            assert sum(m * S.dim for m, S in zip(got, irreps)) == X.dim * Y.dim


def test_dual_rep(irreps):
    three = irreps[3]
    D = dual_rep(three)
    assert check_module(D).ok
    want = [x.conjugate() for x in char_values(three)]
    assert all(abs(a - b) < 1e-9 for a, b in zip(char_values(D), want))
    assert multiplicity(irreps[4], D) == 1


def test_intertwiners_between_isomorphic_copies(kg):
    X, Y = three_dim(kg, 1), three_dim(kg, 2)  # s = 2 is in the orbit of 1 under x -> 2x
    maps = intertwiners(X, Y)
    assert len(maps) == 1
    assert intertwiners(three_dim(kg, 1), three_dim(kg, 3)) == []


def test_normalized_integral(kg):
    lam = normalized_integral(kg)
    assert lam == {g: Cyc(N, 1) / 21 for g in range(21)}
