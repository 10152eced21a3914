import json

import pytest

from hopfforge.constructors import script_A_l_data
from hopfforge.groups import (GroupError, MatchedPairData, cyclic, group_from_table,
                              matched_pair_from_json, matched_pair_to_json, semidirect,
                              trivial_matched_pair, validate_matched_pair)
from hopfforge.scalars import Cyc


def test_cyclic():
    G = cyclic(3)
    assert G.order == 3 and G.identity == 0
    assert G.mul(2, 2) == 1 and G.inv(1) == 2


def test_semidirect_relation():
    G = semidirect(7, 3, 2)
    assert G.order == 21
    a, b = 1 * 3 + 0, 0 * 3 + 1
    assert G.mul(G.mul(b, a), G.inv(b)) == G.power(a, 2)
    assert G.element_order(a) == 7 and G.element_order(b) == 3


def test_semidirect_rejects_bad_t():
    with pytest.raises(GroupError):
        semidirect(7, 3, 3)
    with pytest.raises(GroupError):
        semidirect(7, 3, 1)


def test_non_group_tables_rejected():
    with pytest.raises(GroupError):
        group_from_table([[0, 1], [1, 1]])
    with pytest.raises(GroupError):
        group_from_table([[0, 1, 2], [1, 0, 0], [2, 1, 0]])


def test_trivial_matched_pair_valid():
    assert validate_matched_pair(trivial_matched_pair(cyclic(3), cyclic(3))) == []
    assert validate_matched_pair(trivial_matched_pair(semidirect(7, 3, 2), cyclic(2))) == []


@pytest.mark.parametrize("l", [0, 1, 2])
def test_script_A_l_data_valid(l):
    assert validate_matched_pair(script_A_l_data(7, 3, 2, l)) == []


def test_corrupted_cocycle_detected():
    data = script_A_l_data(7, 3, 2, 1)
    omega = Cyc.zeta(data.N, data.N // 3)
    bad = MatchedPairData(data.G, data.F, data.left, data.right,
                          sigma=lambda g, m, n: omega if (g, m, n) == (1, 1, 1) else data.sigma(g, m, n),
                          tau=data.tau, N=data.N)
    failures = validate_matched_pair(bad)
    assert failures and all(isinstance(w, str) for w, _ in failures)


def test_bad_left_action_detected():
    G, F = semidirect(7, 3, 2), cyclic(3)
    data = trivial_matched_pair(G, F)
    data.left = lambda g, f: G.mul(g, 1) if f else g
    assert validate_matched_pair(data)


@pytest.mark.parametrize("l", [0, 1])
def test_matched_pair_json_round_trip(l):
    data = script_A_l_data(7, 3, 2, l)
    obj = json.loads(json.dumps(matched_pair_to_json(data)))
    back = matched_pair_from_json(obj)
    assert back.tables() == data.tables()
    assert back.N == data.N and back.G.table == data.G.table


def test_matched_pair_json_short_forms():
    data = matched_pair_from_json({"G": {"cyclic": 3}, "F": {"cyclic": 2}})
    assert validate_matched_pair(data) == []
    assert data.sigma(1, 1, 1) == Cyc.one(1)
