import itertools
import warnings

import pytest

from hopfforge.constructors import (abelian_extension, build_A_G_sigma_n, build_script_A_l,
                                    function_algebra, group_algebra, taft, taft_averaging_elements,
                                    taft_characters, taft_grouplikes, taft_index)
from hopfforge.groups import GroupError, MatchedPairData, cyclic, semidirect, trivial_matched_pair
from hopfforge.hopf import HopfError, check_hopf, check_star, is_character, is_group_like
from hopfforge.scalars import Cyc


def test_group_and_function_algebras():
    G = semidirect(7, 3, 2)
    for H in (group_algebra(G), function_algebra(G)):
        assert H.dim == 21
        assert check_hopf(H).ok
        assert check_star(H).ok


def test_trivial_extension_is_tensor_product():
    G, F = cyclic(3), cyclic(3)
    H = abelian_extension(trivial_matched_pair(G, F))
    assert H.dim == 9
    one = Cyc.one(1)
    K, A = function_algebra(G), group_algebra(F)
    # e_g # f multiplies like (e_g (x) f)
    for (g, f), (g2, f2) in itertools.product(itertools.product(range(3), repeat=2), repeat=2):
        lhs = H.mul({g * 3 + f: one}, {g2 * 3 + f2: one})
        k = K.mul({g: one}, {g2: one})
        a = A.mul({f: one}, {f2: one})
        want = {gg * 3 + ff: one for gg in k for ff in a}
        assert lhs == want
    assert check_hopf(H).ok


def test_script_A_0_dimension_and_generators():
    H, chi, x = build_script_A_l(7, 3, 2, 0)
    assert H.dim == 63
    assert is_group_like(H, x)
    assert is_character(H, chi)
    assert H.power(x, 3) == H.unit


def test_A_G_sigma_n_reproduces_script_A_0():
    G = semidirect(7, 3, 2)
    one = Cyc.one(21)
    H, chi, x = build_A_G_sigma_n(G, 1, lambda g, i, j: one, 3, N=21)
    A, chiA, xA = build_script_A_l(7, 3, 2, 0)
    assert H.dim == 63
    assert H._mult_t == A._mult_t and H._comult_t == A._comult_t and H._anti_t == A._anti_t
    assert chi == chiA and x == xA
    assert is_group_like(H, x)


def test_A_G_sigma_n_rejects_wrong_order():
    G = semidirect(7, 3, 2)
    with pytest.raises(GroupError):
        build_A_G_sigma_n(G, 3, lambda g, i, j: Cyc.one(3), 3)  # a has order 7


def test_invalid_matched_pair_rejected_before_construction():
    G, F = semidirect(7, 3, 2), cyclic(3)
    data = trivial_matched_pair(G, F)
    data.left = lambda g, f: G.mul(g, 1) if f else g
    with pytest.raises(GroupError):
        abelian_extension(data)


def test_taft_relations_and_dimensions():
    for l, n in [(3, 1), (3, 2), (5, 1)]:
        H, chi = taft(l, n)
        assert H.dim == l ** (2 * n)
    H, chi = taft(3, 1)
    one = Cyc.one(3)
    q = Cyc.zeta(3)
    g, xx = {taft_index(3, 1, (0,), (1,)): one}, {taft_index(3, 1, (1,), (0,)): one}
    assert H.mul(g, xx) == {k: q * c for k, c in H.mul(xx, g).items()}
    assert H.power(xx, 3) == {}
    assert H.power(g, 3) == H.unit
    assert len(taft_grouplikes(H)) == 3
    assert all(is_character(H, phi) for _, phi in taft_characters(H))


def test_taft_two_rank_commutation():
    H, _ = taft(3, 2)
    one = Cyc.one(3)
    x1 = {taft_index(3, 2, (1, 0), (0, 0)): one}
    x2 = {taft_index(3, 2, (0, 1), (0, 0)): one}
    g1 = {taft_index(3, 2, (0, 0), (1, 0)): one}
    q = Cyc.zeta(3)
    assert H.mul(g1, x1) == {k: q * c for k, c in H.mul(x1, g1).items()}
    qi = q.inv()
    # theta(1, 2) = q^-1, theta(2, 1) = q
    assert H.mul(g1, x2) == {k: qi * c for k, c in H.mul(x2, g1).items()}
    assert H.mul(x1, x2) == {k: qi * c for k, c in H.mul(x2, x1).items()}
    assert H.mul(x2, x1) == {k: q * c for k, c in H.mul(x1, x2).items()}
    assert check_hopf(H).ok


def test_taft_rejects_non_primitive_root():
    with pytest.raises(HopfError):
        taft(3, 1, Cyc.one(3))
    with pytest.raises(HopfError):
        taft(1, 1)


def test_taft_even_l_warns():
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        taft(4, 1)
    assert any("even" in str(x.message) for x in w)


def test_taft_averaging_family_is_basis():
    for n in (1, 2):
        H, _ = taft(3, n)
        labels, vecs, rank = taft_averaging_elements(H)
        assert len(vecs) == 3 ** (2 * n - 1)
        assert rank == H.dim


def test_star_requires_unitary_cocycles():
    G, F = cyclic(3), cyclic(3)
    data = trivial_matched_pair(G, F)
    two = Cyc(1, 2)
    bad = MatchedPairData(G, F, data.left, data.right, sigma=lambda g, f, f2: Cyc.one(1),
                          tau=lambda g, g2, f: two)
    with pytest.raises((GroupError, HopfError)):
        abelian_extension(bad, star=True)
