"""Modular data of a semisimple factorizable ribbon Hopf algebra from its simples."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..double import QuasiData, RibbonWitness, check_ribbon_element, drinfeld_u
from ..hopf import HopfError, Report, centralizes, is_group_like
from ..linalg import axpy
from ..scalars import Cyc, order_of
from .reps import RepError, mat_identity

__all__ = [
    "ModularData",
    "ribbon_from_drinfeld",
    "modular_data",
    "verlinde_coefficient",
    "check_modular",
    "sample_triples",
]


def ribbon_from_drinfeld(Q: QuasiData, candidates=None, *, hs=None) -> RibbonWitness | None:
    """v = u l^-1 for the first central group-like l among ``candidates`` that
    passes the ribbon axioms (default candidate: the unit).

    The coproduct axiom is implied by Drinfeld's identity
    Delta(u) = (R21 R)^-1 (u (x) u) once l is a central group-like, so it is
    not re-expanded here.
    """
    A = Q.H
    u, _ = drinfeld_u(Q)
    for ell in (candidates or [A.unit]):
        if not is_group_like(A, ell) or not centralizes(A, ell, hs):
            continue
        v = A.mul(u, A.antipode(ell))
        rep = check_ribbon_element(Q, v, u, hs=hs, check_delta=False)
        rep.notes.append("Delta(v) follows from Drinfeld's identity for u and group-like l")
        if rep.ok:
            return RibbonWitness(a=A.unit, beta={}, v=v, ell=ell, report=rep)
    return None


@dataclass
class ModularData:
    labels: list
    dims: list
    S: dict                      # (a, b) -> Cyc, unnormalized
    theta: dict                  # a -> Cyc
    D2: int
    meta: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "labels": [getattr(lab, "to_json", lambda: str(lab))() for lab in self.labels],
            "dims": self.dims,
            "D2": self.D2,
            "theta": {str(a): c.to_json() for a, c in sorted(self.theta.items())},
            "S": [[a, b, c.to_json()] for (a, b), c in sorted(self.S.items())],
            "meta": self.meta,
        }


def _half_traces(Q: QuasiData, simples, rows):
    """w_X = (chi_X (x) id)(R21 R) as an element, for X in rows."""
    M = Q.r21r()
    by_left = {}
    for (i, j), c in M.items():
        by_left.setdefault(i, []).append((j, c))
    out = {}
    for a in rows:
        X = simples[a]
        w = {}
        for i, terms in by_left.items():
            ch = X.character_basis(i)
            if ch:
                for j, c in terms:
                    axpy(w, {j: c * ch}, 1)
        out[a] = w
    return out


def modular_data(Q: QuasiData, simples, ribbon: RibbonWitness | None, *, rows=None) -> ModularData:
    """S~_XY = trace of R21 R on X (x) Y, theta_X = rho_X(v).

    ``rows`` restricts S~ to rows (and the matching columns by symmetry
    checks later); by default every row is computed.
    """
    if ribbon is None:
        raise HopfError("no ribbon witness available")
    n = len(simples)
    rows = list(range(n)) if rows is None else sorted(set(rows))
    w = _half_traces(Q, simples, rows)
    S = {}
    for a in rows:
        for b in range(n):
            S[(a, b)] = simples[b].character(w[a])
    theta = {}
    for a, X in enumerate(simples):
        op = X.act(ribbon.v)
        val = op.get(0, {}).get(0, Cyc.zero(Q.H.N))
        expected = {k: {k: val} for k in range(X.dim)} if val else {}
        if op != expected:
            raise RepError(f"ribbon element is not scalar on {X.label}")
        theta[a] = val
    dims = [X.dim for X in simples]
    return ModularData([X.label for X in simples], dims, S, theta, sum(d * d for d in dims))


def verlinde_coefficient(md: ModularData, a: int, b: int, c: int) -> Cyc:
    """(1/D^2) sum_x S_ax S_bx conj(S_cx) / S_0x with S_0x = dim x."""
    acc = None
    for x in range(len(md.labels)):
        term = md.S[(a, x)] * md.S[(b, x)] * md.S[(c, x)].conj() / md.dims[x]
        acc = term if acc is None else acc + term
    return acc / md.D2


def check_modular(md: ModularData, ring, triples, unit: int) -> Report:
    """theta roots of unity, theta_1 = 1, S symmetric, Verlinde matches ``ring``."""
    rep = Report("modular data")
    for a, th in md.theta.items():
        if order_of(th) is None:
            rep.fail("theta is a root of unity", str(md.labels[a]))
    rep.count("twists", len(md.theta))
    if md.theta.get(unit) != Cyc.one(md.theta[unit].N):
        rep.fail("theta of the unit object is 1", None)
    for (a, b), v in md.S.items():
        if (b, a) in md.S:
            if md.S[(b, a)] != v:
                rep.fail("S symmetric", (a, b))
            rep.count("symmetry pairs")
    for a, b, c in triples:
        val = verlinde_coefficient(md, a, b, c)
        want = ring.coefficient(a, b, c)
        if val != Cyc(val.N, want):
            rep.fail("Verlinde coefficient", (str(md.labels[a]), str(md.labels[b]),
                                              str(md.labels[c]), str(val), want))
        rep.count("Verlinde triples")
    return rep


def sample_triples(ring, k: int, seed: int = 1) -> list:
    """Seeded (a, b, c); every other c is drawn from the support of a.b in ``ring``."""
    rng = random.Random(seed)
    n = ring.rank
    out = []
    for s in range(k):
        a, b = rng.randrange(n), rng.randrange(n)
        support = sorted(ring.product(a, b))
        c = rng.choice(support) if (s % 2 == 0 and support) else rng.randrange(n)
        out.append((a, b, c))
    return out
