"""Finite groups by multiplication table and matched-pair cocycle data."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .scalars import Cyc, order_of

__all__ = [
    "GroupError",
    "FiniteGroup",
    "group_from_table",
    "cyclic",
    "semidirect",
    "MatchedPairData",
    "validate_matched_pair",
    "trivial_matched_pair",
    "is_prime",
    "matched_pair_to_json",
    "matched_pair_from_json",
]


class GroupError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FiniteGroup:
    """Group on elements 0..n-1 with a validated multiplication table."""

    def __init__(self, table, labels=None):
        n = len(table)
        self.order = n
        self.table = [list(row) for row in table]
        if any(len(row) != n for row in self.table):
            raise GroupError("table must be square")
        if any(not (0 <= v < n) for row in self.table for v in row):
            raise GroupError("table entries out of range")
        ids = [e for e in range(n) if all(self.table[e][g] == g and self.table[g][e] == g for g in range(n))]
        if len(ids) != 1:
            raise GroupError("no unique identity")
        self.identity = ids[0]
        self.inverse = [None] * n
        for g in range(n):
            inv = [h for h in range(n) if self.table[g][h] == self.identity]
            if len(inv) != 1 or self.table[inv[0]][g] != self.identity:
                raise GroupError(f"element {g} has no two-sided inverse")
            self.inverse[g] = inv[0]
        t = self.table
        for a in range(n):
            ta = t[a]
            for b in range(n):
                tab = t[ta[b]]
                tb = t[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise GroupError(f"associativity fails at {(a, b, c)}")
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        r = self.identity
        for _ in range(k):
            r = self.table[r][a]
        return r

    def element_order(self, a: int) -> int:
        k, r = 1, a
        while r != self.identity:
            r = self.table[r][a]
            k += 1
        return k

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


def group_from_table(table, labels=None) -> FiniteGroup:
    return FiniteGroup(table, labels)


def cyclic(n: int) -> FiniteGroup:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, [f"g^{i}" for i in range(n)])


def semidirect(p: int, q: int, t: int) -> FiniteGroup:
    """Z_p x| Z_q = <a, b | a^p = b^q = 1, b a b^-1 = a^t>.

    Element a^i b^j has index i*q + j.
    """
    if not (is_prime(p) and is_prime(q) and p % 2 and q % 2):
        raise GroupError("p and q must be odd primes")
    if pow(t, q, p) != 1 or t % p == 1:
        raise GroupError(f"need t^q = 1 and t != 1 mod p (t={t}, p={p}, q={q})")
    # b^j a^i' = a^(i' t^j) b^j
    table = [[0] * (p * q) for _ in range(p * q)]
    for i in range(p):
        for j in range(q):
            for i2 in range(p):
                for j2 in range(q):
                    ii = (i + i2 * pow(t, j, p)) % p
                    jj = (j + j2) % q
                    table[i * q + j][i2 * q + j2] = ii * q + jj
    labels = [f"a^{i}b^{j}" for i in range(p) for j in range(q)]
    G = FiniteGroup(table, labels)
    G.params = (p, q, t)
    return G


@dataclass
class MatchedPairData:
    """Matched pair (F, G, left, right) with cocycles sigma, tau.

    ``left(g, f)`` is g <| f in G, ``right(g, f)`` is g |> f in F;
    ``sigma(g, f, f2)`` and ``tau(g, g2, f)`` return Cyc values.
    """

    G: FiniteGroup
    F: FiniteGroup
    left: Callable[[int, int], int]
    right: Callable[[int, int], int]
    sigma: Callable[[int, int, int], Cyc]
    tau: Callable[[int, int, int], Cyc]
    N: int = 1
    meta: dict = field(default_factory=dict)

    def tables(self):
        """Dense tables (lists) for serialization."""
        G, F = self.G, self.F
        return {
            "left": [[self.left(g, f) for f in range(F.order)] for g in range(G.order)],
            "right": [[self.right(g, f) for f in range(F.order)] for g in range(G.order)],
            "sigma": [[[self.sigma(g, f, f2) for f2 in range(F.order)] for f in range(F.order)] for g in range(G.order)],
            "tau": [[[self.tau(g, g2, f) for f in range(F.order)] for g2 in range(G.order)] for g in range(G.order)],
        }


def trivial_matched_pair(G: FiniteGroup, F: FiniteGroup, N: int = 1) -> MatchedPairData:
    one = Cyc.one(N)
    return MatchedPairData(
        G, F,
        left=lambda g, f: g,
        right=lambda g, f: f,
        sigma=lambda g, f, f2: one,
        tau=lambda g, g2, f: one,
        N=N,
    )


def validate_matched_pair(data: MatchedPairData) -> list:
    """Every failed identity with its witnessing tuple; empty means valid."""
    G, F = data.G, data.F
    lt, rt, sg, ta = data.left, data.right, data.sigma, data.tau
    gm, fm = G.mul, F.mul
    e_g, e_f = G.identity, F.identity
    failures = []
    nG, nF = G.order, F.order
    L = [[lt(g, f) for f in range(nF)] for g in range(nG)]
    R = [[rt(g, f) for f in range(nF)] for g in range(nG)]
    # actions
    for g in range(nG):
        if L[g][e_f] != g:
            failures.append(("left action unit", (g,)))
        for f in range(nF):
            for f2 in range(nF):
                if L[L[g][f]][f2] != L[g][fm(f, f2)]:
                    failures.append(("left action", (g, f, f2)))
    for f in range(nF):
        if R[e_g][f] != f:
            failures.append(("right action unit", (f,)))
        for g in range(nG):
            for g2 in range(nG):
                if R[gm(g, g2)][f] != R[g][R[g2][f]]:
                    failures.append(("right action", (g, g2, f)))
    # matched pair compatibilities
    for g in range(nG):
        for f in range(nF):
            for f2 in range(nF):
                lhs = R[g][fm(f, f2)]
                rhs = fm(R[g][f], R[L[g][f]][f2])
                if lhs != rhs:
                    failures.append(("g|>(ff') identity", (g, f, f2)))
    for g in range(nG):
        for g2 in range(nG):
            for f in range(nF):
                lhs = L[gm(g, g2)][f]
                rhs = gm(L[g][R[g2][f]], L[g2][f])
                if lhs != rhs:
                    failures.append(("(gg')<|f identity", (g, g2, f)))
    S = [[[sg(g, f, f2) for f2 in range(nF)] for f in range(nF)] for g in range(nG)]
    T = [[[ta(g, g2, f) for f in range(nF)] for g2 in range(nG)] for g in range(nG)]
    for g in range(nG):
        for f in range(nF):
            for f2 in range(nF):
                if S[e_g][f][f2] != 1 or S[g][e_f][f2] != 1 or S[g][f][e_f] != 1:
                    failures.append(("sigma normalization", (g, f, f2)))
                for f3 in range(nF):
                    lhs = S[L[g][f]][f2][f3] * S[g][f][fm(f2, f3)]
                    rhs = S[g][f][f2] * S[g][fm(f, f2)][f3]
                    if lhs != rhs:
                        failures.append(("sigma cocycle", (g, f, f2, f3)))
    for g in range(nG):
        for g2 in range(nG):
            for f in range(nF):
                if T[g][g2][e_f] != 1 or T[g][e_g][f] != 1 or T[e_g][g2][f] != 1:
                    failures.append(("tau normalization", (g, g2, f)))
                for g3 in range(nG):
                    lhs = T[gm(g, g2)][g3][f] * T[g][g2][R[g3][f]]
                    rhs = T[g2][g3][f] * T[g][gm(g2, g3)][f]
                    if lhs != rhs:
                        failures.append(("tau cocycle", (g, g2, g3, f)))
    for g in range(nG):
        for g2 in range(nG):
            for f in range(nF):
                for f2 in range(nF):
                    lhs = S[gm(g, g2)][f][f2] * T[g][g2][fm(f, f2)]
                    g2f = R[g2][f]
                    g2lf = L[g2][f]
                    rhs = (S[g][g2f][R[g2lf][f2]] * S[g2][f][f2]
                           * T[g][g2][f] * T[L[g][g2f]][g2lf][f2])
                    if lhs != rhs:
                        failures.append(("sigma-tau compatibility", (g, g2, f, f2)))
    return failures


def _group_json(G: FiniteGroup):
    out = {"table": G.table, "labels": G.labels}
    if hasattr(G, "params"):
        out["semidirect"] = list(G.params)
    return out


def _group_from_json(obj) -> FiniteGroup:
    if "semidirect" in obj:
        return semidirect(*obj["semidirect"])
    if "cyclic" in obj:
        return cyclic(obj["cyclic"])
    return FiniteGroup(obj["table"], obj.get("labels"))


def matched_pair_to_json(data: MatchedPairData) -> dict:
    t = data.tables()
    enc = lambda c: c.to_json()  # noqa: E731
    return {
        "N": data.N,
        "G": _group_json(data.G),
        "F": _group_json(data.F),
        "left": t["left"],
        "right": t["right"],
        "sigma": [[[enc(c) for c in row] for row in plane] for plane in t["sigma"]],
        "tau": [[[enc(c) for c in row] for row in plane] for plane in t["tau"]],
        "meta": data.meta,
    }


def matched_pair_from_json(obj) -> MatchedPairData:
    """Inverse of matched_pair_to_json; groups may also be {"cyclic": n} or
    {"semidirect": [p, q, t]}, and sigma/tau may be omitted (trivial)."""
    N = obj.get("N", 1)
    G = _group_from_json(obj["G"])
    F = _group_from_json(obj["F"])
    L = obj.get("left") or [[g for _ in range(F.order)] for g in range(G.order)]
    Rt = obj.get("right") or [[f for f in range(F.order)] for _ in range(G.order)]
    one = Cyc.one(N)
    if "sigma" in obj:
        S = [[[Cyc.from_json(c) for c in row] for row in plane] for plane in obj["sigma"]]
    else:
        S = None
    if "tau" in obj:
        T = [[[Cyc.from_json(c) for c in row] for row in plane] for plane in obj["tau"]]
    else:
        T = None
    return MatchedPairData(
        G, F,
        left=lambda g, f: L[g][f],
        right=lambda g, f: Rt[g][f],
        sigma=(lambda g, f, f2: S[g][f][f2]) if S else (lambda g, f, f2: one),
        tau=(lambda g, g2, f: T[g][g2][f]) if T else (lambda g, g2, f: one),
        N=N,
        meta=obj.get("meta", {}),
    )
