import pytest

from hopfforge.constructors import group_algebra, taft, taft_characters, taft_grouplikes
from hopfforge.double import (DrinfeldDouble, QuasiData, check_drinfeld_u, check_quasi,
                              drinfeld_double, factorizability_rank, is_factorizable,
                              ribbon_search)
from hopfforge.groups import cyclic
from hopfforge.hopf import check_hopf, check_star, distinguished_grouplikes, is_group_like
from hopfforge.scalars import Cyc


@pytest.fixture(scope="module")
def dtaft():
    H, chi = taft(3, 1)
    D, R, ed, eh = drinfeld_double(H)
    return H, chi, D, R, ed, eh


def test_double_of_taft_is_hopf_and_quasitriangular(dtaft):
    H, _, D, R, _, _ = dtaft
    assert D.dim == 81
    assert check_hopf(D).ok
    assert check_quasi(QuasiData(D, R)).ok
    assert check_drinfeld_u(QuasiData(D, R)).ok


def test_canonical_r21r_matches_explicit_product(dtaft):
    _, _, D, R, _, _ = dtaft
    Q = QuasiData(D, R)
    assert Q.r21r() == Q.r21r(explicit=True)


def test_embeddings_are_hopf_maps(dtaft):
    H, chi, D, _, ed, eh = dtaft
    for i in range(H.dim):
        b = {i: H.one}
        assert D.comul(eh(b)) == {(k1, k2): c for (k1, k2), c in
                                  _push(D, eh, H.comul(b)).items()}
    assert is_group_like(D, ed(chi))


def _push(D, emb, T):
    out = {}
    for (i, j), c in T.items():
        for a, x in emb({i: D.one}).items():
            for b, y in emb({j: D.one}).items():
                out[(a, b)] = out.get((a, b), Cyc.zero(D.N)) + c * x * y
    return {k: v for k, v in out.items() if v}


def test_double_factorizable(dtaft):
    _, _, D, R, _, _ = dtaft
    rf, rg, method = factorizability_rank(QuasiData(D, R))
    assert (rf, rg) == (81, 81)
    assert method == "exact"
    Dg, Rg, _, _ = drinfeld_double(group_algebra(cyclic(3)))
    assert is_factorizable(QuasiData(Dg, Rg))


def test_trivial_R_not_factorizable():
    H = group_algebra(cyclic(3))
    Q = QuasiData(H, {(0, 0): Cyc.one(1)})  # 1 (x) 1, triangular
    assert check_quasi(Q).ok
    assert factorizability_rank(Q)[:2] == (1, 1)
    assert not is_factorizable(Q)


def test_scaled_R_fails_axioms(dtaft):
    _, _, D, R, _, _ = dtaft
    assert not check_quasi(QuasiData(D, {k: 2 * c for k, c in R.items()})).ok


def test_double_of_star_algebra_has_star():
    from hopfforge.constructors import function_algebra
    D, _, _, _ = drinfeld_double(function_algebra(cyclic(3)))
    assert isinstance(D, DrinfeldDouble)
    assert check_star(D).ok


def test_ribbon_search_taft(dtaft):
    H, _, D, R, _, _ = dtaft
    a_c = [v for _, v in taft_grouplikes(H)]
    b_c = [phi for _, phi in taft_characters(H)]
    g, alpha = distinguished_grouplikes(H)
    w = ribbon_search(QuasiData(D, R), a_c, b_c, g=g, alpha=alpha)
    assert w is not None and w.report.ok
    assert H.mul(w.a, w.a) == g
    assert ribbon_search(QuasiData(D, R), [], b_c) is None
    assert ribbon_search(QuasiData(D, R), a_c, []) is None
