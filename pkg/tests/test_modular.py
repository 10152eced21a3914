import json

from hopfforge.reptheory.modular import (check_modular, modular_data, ribbon_from_drinfeld,
                                         sample_triples, verlinde_coefficient)
from hopfforge.scalars import Cyc, order_of


def test_ribbon_and_unit_row(apq, simples, closed_ring):
    QQ = apq.quasi()
    w = ribbon_from_drinfeld(QQ, hs=apq.generators)
    assert w is not None and w.report.ok
    u = closed_ring.unit
    md = modular_data(QQ, simples, w, rows=[u])
    assert [md.S[(u, b)] for b in range(75)] == [Cyc(apq.N, d) for d in md.dims]
    assert md.theta[u] == Cyc.one(apq.N)
    assert all(order_of(t) is not None for t in md.theta.values())
    # Verlinde with a = unit reproduces delta_{bc} on the unit row only
    assert verlinde_coefficient(md, u, u, u) == Cyc.one(apq.N)
    json.dumps(md.to_json())


def test_sample_triples_seeded(closed_ring):
    a = sample_triples(closed_ring, 10, 1)
    assert a == sample_triples(closed_ring, 10, 1)
    assert a != sample_triples(closed_ring, 10, 2)
    for k, (x, y, z) in enumerate(a):
        if k % 2 == 0:
            assert closed_ring.coefficient(x, y, z) > 0


def test_check_modular_detects_bad_twist(apq, simples, closed_ring):
    QQ = apq.quasi()
    w = ribbon_from_drinfeld(QQ, hs=apq.generators)
    u = closed_ring.unit
    md = modular_data(QQ, simples, w, rows=[u])
    md.theta[u] = Cyc(apq.N, 2)
    assert not check_modular(md, closed_ring, [], u).ok
