import json

import pytest

from hopfforge.constructors import (build_script_A_l, function_algebra, group_algebra, taft,
                                    taft_index)
from hopfforge.double import drinfeld_double
from hopfforge.groups import cyclic, semidirect
from hopfforge.hopf import (HopfData, StarAbsent, center_basis, centralizes, check_double_dual,
                            check_hopf, check_star, distinguished_grouplikes, dual,
                            is_character, is_group_like, is_semisimple, left_integral)
from hopfforge.scalars import Cyc


@pytest.fixture(scope="module")
def taft31():
    return taft(3, 1)


def tidx(k, t):
    return taft_index(3, 1, (k,), (t,))


def test_group_algebra_passes():
    assert check_hopf(group_algebra(cyclic(3))).ok


def test_taft_passes(taft31):
    H, _ = taft31
    rep = check_hopf(H)
    assert rep.ok
    assert rep.checked["associativity triples"] == 9 ** 3


def test_corrupted_taft_fails_with_witness(taft31):
    H, _ = taft31
    one = Cyc.one(H.N)
    bad = H.materialize().corrupted(tidx(0, 1), tidx(1, 0), {tidx(1, 1): one})
    rep = check_hopf(bad)
    assert not rep.ok
    assert rep.failures[0][1] is not None


def test_dual_of_group_algebra_is_function_algebra():
    G = cyclic(3)
    D = dual(group_algebra(G))
    K = function_algebra(G)
    one = Cyc.one(1)
    for i in range(3):
        for j in range(3):
            assert D.mul({i: one}, {j: one}) == ({i: one} if i == j else {})
            assert D.mul({i: one}, {j: one}) == K.mul({i: one}, {j: one})
    assert check_hopf(D).ok


def test_group_likes_and_characters(taft31):
    H, chi = taft31
    one = Cyc.one(H.N)
    assert is_group_like(H, H.unit)
    assert not is_group_like(H, {tidx(1, 0): one})
    assert is_group_like(H, {tidx(0, 1): one})
    assert is_character(H, chi)
    A, chiA, x = build_script_A_l(7, 3, 2, 0)
    assert is_group_like(A, x)
    assert is_character(A, chiA)


def test_semisimplicity():
    assert is_semisimple(group_algebra(cyclic(3)))
    H, _ = taft(3, 1)
    assert not is_semisimple(H)
    assert H.eps(left_integral(H)).is_zero()


def test_distinguished_grouplikes_taft(taft31):
    H, _ = taft31
    g, alpha = distinguished_grouplikes(H)
    assert is_group_like(H, g)
    assert is_character(H, alpha)
    q = Cyc.zeta(3)
    # alpha(g_1) = q and g = g_1^-1 in this convention
    assert alpha.get(tidx(0, 1)) == q
    assert g == {tidx(0, 2): Cyc.one(3)}


def test_center():
    assert len(center_basis(group_algebra(cyclic(3)))) == 3
    assert len(center_basis(group_algebra(semidirect(7, 3, 2)))) == 5  # conjugacy classes


def test_chi_x_central_in_double():
    H, chi, x = build_script_A_l(7, 3, 2, 0)
    D, _, ed, eh = drinfeld_double(H)
    z = D.mul(ed(chi), eh(x))
    assert is_group_like(D, z)
    assert centralizes(D, z, D.generators())


def test_star_axioms():
    assert check_star(function_algebra(cyclic(3))).ok
    H, _, _ = build_script_A_l(7, 3, 2, 0)
    assert check_star(H).ok
    with pytest.raises(StarAbsent):
        check_star(taft(3, 1)[0])


def test_literal_star_on_A1_fails():
    from hopfforge.constructors import abelian_extension, script_A_l_data
    H = abelian_extension(script_A_l_data(7, 3, 2, 1), literal_star=True)
    assert not check_star(H).ok


def test_double_dual(taft31):
    assert check_double_dual(taft31[0]).ok


def test_sampled_check_is_seeded(taft31):
    H, _ = taft31
    a = check_hopf(H, sample=20, seed=3)
    b = check_hopf(H, sample=20, seed=3)
    assert a.ok and a.checked == b.checked


@pytest.mark.parametrize("make", [lambda: taft(3, 1)[0], lambda: build_script_A_l(7, 3, 2, 1)[0],
                                  lambda: group_algebra(cyclic(4))])
def test_hopf_json_round_trip(make):
    H = make()
    data = H if isinstance(H, HopfData) else H.materialize()
    back = HopfData.from_json(json.loads(json.dumps(data.to_json())))
    assert back.structurally_equal(data)
    assert back.content_hash() == data.content_hash()


def test_distinguished_character_convention_two_rank():
    from hopfforge.constructors import taft_index as ti
    H, _ = taft(3, 2)
    _, alpha = distinguished_grouplikes(H)
    q = Cyc.zeta(3)
    n = 2
    for i in (1, 2):
        gi = ti(3, 2, (0, 0), tuple(1 if k == i - 1 else 0 for k in range(n)))
        assert alpha[gi] == q ** ((-n + 2 * i) % 3)
