from collections import Counter

import pytest

from hopfforge.hopf import is_group_like
from hopfforge.reptheory import (SimpleLabel, build_simple, canonical_label, coset_rep,
                                 enumerate_labels, hom_dim, paper_rank_formula,
                                 verify_presentation_thm46)
from hopfforge.reptheory.reps import check_module, check_unitary

P, Q, T = 7, 3, 2


def test_quotient_dimensions(apq):
    assert apq.H.dim == 63 and apq.D.dim == 3969 and apq.Q.dim == 1323
    assert apq.ideal_report.ok
    assert apq.Q.star_closed


def test_presentation(apq):
    rep = verify_presentation_thm46(apq)
    assert rep.ok, rep.failures[:3]
    assert rep.checked["reached dimension"] == 1323


def test_designated_generators_group_like(apq):
    for g in [apq.x, apq.chi]:
        assert is_group_like(apq.Q, g)


def test_labels(beta):
    labels = enumerate_labels(P, Q, T, beta)
    assert len(labels) == 75
    assert Counter(lab.family for lab in labels) == {"T": 9, "U": 6, "V": 42, "W": 18}
    assert paper_rank_formula(P, Q) == 459 != len(labels)
    assert all(canonical_label(*lab, P, Q, T, beta) == lab for lab in labels)


def test_coset_reps(beta):
    seen = set()
    for v in range(1, P):
        r, c = coset_rep(v, P, Q, T, beta)
        assert pow(beta, r, P) * pow(T, c, P) % P == v
        seen.add((r, c))
    assert len(seen) == P - 1
    with pytest.raises(ValueError):
        coset_rep(0, P, Q, T, beta)


def test_trivial_module_is_counit(apq):
    S = build_simple(apq, SimpleLabel("T", (0, 0)))
    assert S.dim == 1
    for i in range(apq.Q.dim):
        assert S.op_basis(i).get(0, {}).get(0, apq.Q.zero) == apq.Q.counit[i]


def test_W_module(apq):
    W = build_simple(apq, SimpleLabel("W", (1, 2, 0)))
    assert W.dim == 7
    assert check_module(W).ok and check_unitary(W).ok


def test_U_canonicalization_is_an_isomorphism(apq):
    for i, j in [(0, 1), (2, 3)]:
        a = build_simple(apq, SimpleLabel("U", (i, j)))
        b = build_simple(apq, SimpleLabel("U", (i, j * T % P)))
        assert hom_dim(a, b) == 1
    assert hom_dim(build_simple(apq, SimpleLabel("U", (0, 1))),
                   build_simple(apq, SimpleLabel("U", (0, 3)))) == 0


def test_V_canonicalization_is_an_isomorphism(apq, beta):
    A, j, K = beta * T % P, 1, 4
    raw = build_simple(apq, SimpleLabel("V", (A, j, K)))
    lab = canonical_label("V", (A, j, K), P, Q, T, beta)
    assert lab == SimpleLabel("V", (beta, j, K * T % P))
    assert hom_dim(raw, build_simple(apq, lab)) == 1


def test_W_labels_distinct(apq):
    a = build_simple(apq, SimpleLabel("W", (1, 2, 0)))
    b = build_simple(apq, SimpleLabel("W", (2, 1, 0)))
    assert hom_dim(a, b) == 0


def test_simples_pairwise_non_isomorphic_by_dimension_classes(simples):
    # same-dimension simples with distinct labels must not intertwine; spot check
    by_dim = {}
    for S in simples:
        by_dim.setdefault(S.dim, []).append(S)
    for group in by_dim.values():
        for a, b in zip(group[:4], group[1:5]):
            assert hom_dim(a, b) == 0
