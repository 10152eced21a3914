"""Quotients D(H)/I by the Hopf ideal generated by a central group-like z.

I = D(H) <z>^+ is spanned by {b_i (z - 1)}.  The quotient is realised on a
complement of the pivot columns of the row-reduced spanning set; pi sends a
complement index to itself and a pivot p to minus the complement part of its
row.
"""
from __future__ import annotations

import hashlib
import json

from .hopf import (HopfAlgebra, HopfError, Report, _tensor_add, convolve, functional_power,
                   hit_left, hit_right, is_character, is_group_like, centralizes)
from .linalg import Echelon, axpy, rank_exact, solve_combination
from .scalars import Cyc, order_of

__all__ = [
    "theorem31_verify",
    "family_dual_basis",
    "central_hopf_ideal",
    "HopfIdeal",
    "QuotientHopf",
    "quotient_hopf",
    "quotient_basis_lemma33",
    "quotient_isomorphism",
    "verify_hopf_ideal",
]


def _element_order(H, x, limit=None):
    limit = limit or 4 * H.dim
    p = dict(x)
    for k in range(1, limit + 1):
        if p == H.unit:
            return k
        p = H.mul(p, x)
    return None


def _character_order(H, chi, limit=None):
    limit = limit or 4 * H.dim
    eps = {i: c for i, c in enumerate(H.counit) if c}
    p = dict(chi)
    for k in range(1, limit + 1):
        if p == eps:
            return k
        p = convolve(H, p, chi)
    return None


def family_dual_basis(H: HopfAlgebra, family, x, n):
    """Dual basis {E_{a_i x^j}} of {a_i x^j}, as functionals on the basis of H.

    Returns (keys, basis_vectors, dual_functionals, rank) where keys are (i, j).
    """
    keys, vecs = [], []
    xp = [H.unit]
    for _ in range(1, n):
        xp.append(H.mul(xp[-1], x))
    for i, a in enumerate(family):
        for j in range(n):
            keys.append((i, j))
            vecs.append(H.mul(a, xp[j]))
    ech = Echelon(track=True)
    for k, v in enumerate(vecs):
        ech.add(v, tag=k)
    rank = ech.rank
    if rank != H.dim or len(vecs) != H.dim:
        return keys, vecs, None, rank
    ech.rref()
    # b_c = sum_k combos[c][k] vecs[k]  =>  E_k(b_c) = combos[c][k]
    duals = [dict() for _ in keys]
    for c in range(H.dim):
        for k, coef in ech.combos[c].items():
            duals[k][c] = coef
    return keys, vecs, duals, rank


def theorem31_verify(H: HopfAlgebra, x: dict, chi: dict, family, sigma, tau, *,
                     left_factors=None, name=None) -> Report:
    """Check the hypotheses (i)-(iii) of the factorizable-quotient theorem and
    the consequences sigma tau = tau sigma and the dual-basis form of (ii).

    ``sigma`` and ``tau`` are permutations given as lists on family indices.
    """
    rep = Report(name or f"quotient theorem hypotheses ({H.name})")
    m = len(family)
    if not is_group_like(H, x):
        rep.fail("x is group-like", None)
        return rep
    n = _element_order(H, x)
    rep.checked["order of x"] = n
    if n is None or n % 2 == 0:
        rep.fail("n is odd", n)
    if not is_character(H, chi, left_factors):
        rep.fail("chi is a character", None)
        return rep
    if n is None:
        return rep
    w = sum((chi.get(i, H.zero) * c for i, c in x.items()), H.zero)
    if order_of(w) != n:
        rep.fail("chi(x) is a primitive n-th root of unity", order_of(w))
    co = _character_order(H, chi)
    rep.checked["order of chi"] = co
    if co != n:
        rep.fail("|chi| = n", co)
    sinv = [None] * m
    tinv = [None] * m
    for i in range(m):
        sinv[sigma[i]] = i
        tinv[tau[i]] = i
    # (i)
    for i, a in enumerate(family):
        if H.mul(x, a) != H.mul(family[sigma[i]], x):
            rep.fail("x a_i = a_sigma(i) x", i)
    keys, vecs, duals, rank = family_dual_basis(H, family, x, n)
    rep.checked["rank of {a_i x^j}"] = rank
    if duals is None:
        rep.fail("{a_i x^j} is a basis", rank)
    # (ii)
    for i, a in enumerate(family):
        if hit_right(H, a, chi) != family[tinv[i]]:
            rep.fail("a_i <- chi = a_tau^-1(i)", i)
        if hit_left(H, chi, a) != family[tinv[sinv[i]]]:
            rep.fail("chi -> a_i = a_(tau^-1 sigma^-1)(i)", i)
    rep.count("family members", m)
    if any(sigma[tau[i]] != tau[sigma[i]] for i in range(m)):
        rep.fail("sigma tau = tau sigma", None)
    # dual-basis form
    if duals is not None:
        pos = {k: idx for idx, k in enumerate(keys)}
        wp = [w ** j for j in range(n)]
        for (i, j), E in zip(keys, duals):
            lhs = convolve(H, chi, E)
            rhs = {k: c * wp[j] for k, c in duals[pos[(tau[i], j)]].items()}
            if lhs != rhs:
                rep.fail("chi E_{a_i x^j} = chi(x)^j E_{a_tau(i) x^j}", (i, j))
            lhs = convolve(H, E, chi)
            rhs = {k: c * wp[j] for k, c in duals[pos[(sigma[tau[i]], j)]].items()}
            if lhs != rhs:
                rep.fail("E_{a_i x^j} chi = chi(x)^j E_{a_sigma tau(i) x^j}", (i, j))
        rep.count("dual basis identities", 2 * len(keys))
    return rep


class HopfIdeal:
    """Span of {b_i (z - 1)} in reduced row echelon form."""

    def __init__(self, D, z, n, spanning, ech):
        self.D, self.z, self.n = D, z, n
        self.spanning = spanning
        self.ech = ech

    @property
    def dim(self):
        return self.ech.rank

    def contains(self, v):
        return self.ech.contains(v)


def central_hopf_ideal(D: HopfAlgebra, z: dict, n: int, *, gens=None, prefer=None,
                       check=True) -> HopfIdeal:
    """I = D <z>^+ for a central group-like z of order n.

    ``prefer`` lists D-indices that should stay outside the pivots (so that
    they end up in the complement when possible).
    """
    if check:
        if not is_group_like(D, z):
            raise HopfError("z is not group-like")
        if not centralizes(D, z, gens):
            raise HopfError("z is not central")
        if _element_order(D, z, n + 1) != n:
            raise HopfError(f"z does not have order {n}")
    if prefer is not None:
        pref = set(prefer)
        order = lambda c: (c in pref, c)  # noqa: E731
    else:
        order = None
    ech = Echelon(order=order)
    spanning = []
    one = D.one
    for i in range(D.dim):
        v = D.mul({i: one}, z)
        _tensor_add(v, i, -one)
        if v:
            spanning.append(v)
            ech.add(v)
    ech.rref()
    return HopfIdeal(D, z, n, spanning, ech)


class QuotientHopf(HopfAlgebra):
    """D / I on the complement of the pivot columns of I."""

    def __init__(self, D: HopfAlgebra, I: HopfIdeal, name=None):
        pivots = I.ech.rows
        comp = [c for c in range(D.dim) if c not in pivots]
        super().__init__(len(comp), D.N, [D.labels[c] for c in comp], name=name or f"{D.name}/I")
        self.D = D
        self.I = I
        self.comp = comp
        self.pos = {c: k for k, c in enumerate(comp)}
        self._proj: dict = {}
        self.unit = self.pi(D.unit)
        self.counit = [D.counit[c] for c in comp]
        self.star_closed = None
        self.meta = {"kind": "quotient", "parent": D.name, "order": I.n,
                     "complement": comp}

    def proj_basis(self, c: int) -> dict:
        r = self._proj.get(c)
        if r is None:
            k = self.pos.get(c)
            if k is not None:
                r = {k: self.one}
            else:
                r = {self.pos[col]: -v for col, v in self.I.ech.rows[c].items() if col != c}
            self._proj[c] = r
        return r

    def pi(self, v: dict) -> dict:
        out = {}
        for c, a in v.items():
            for k, b in self.proj_basis(c).items():
                _tensor_add(out, k, a * b)
        return out

    def pi2(self, T: dict) -> dict:
        out = {}
        for (i, j), a in T.items():
            pi_, pj = self.proj_basis(i), self.proj_basis(j)
            for k, b in pi_.items():
                ab = a * b
                for l, c in pj.items():
                    _tensor_add(out, (k, l), ab * c)
        return out

    def lift(self, v: dict) -> dict:
        return {self.comp[k]: c for k, c in v.items()}

    def _mul(self, i, j):
        return self.pi(self.D.mul_basis(self.comp[i], self.comp[j]))

    def _comul(self, i):
        return self.pi2(self.D.comul_basis(self.comp[i]))

    def _antipode(self, i):
        return self.pi(self.D.antipode_basis(self.comp[i]))

    @property
    def has_star(self):
        return bool(self.star_closed) and self.D.has_star

    def _star(self, i):
        if not self.has_star:
            raise HopfError("quotient carries no star (ideal not star-closed or unchecked)")
        return self.pi(self.D.star_basis(self.comp[i]))

    def project_r21r(self):
        return self.pi2(self.D.r21r())

    def provenance(self):
        blob = json.dumps(self.comp).encode()
        return {
            "parent": self.D.name,
            "parent_hash": self.D.meta.get("hash"),
            "z": [[i, c.to_json()] for i, c in sorted(self.I.z.items())],
            "n": self.I.n,
            "complement_sha256": hashlib.sha256(blob).hexdigest(),
            "complement": self.comp,
        }


def verify_hopf_ideal(Q: QuotientHopf, *, star=True) -> Report:
    """eps(I) = 0, S(I) in I, Delta(I) in I(x)D + D(x)I (via pi(x)pi = 0),
    star-closedness when the parent has a star."""
    D, I = Q.D, Q.I
    rep = Report(f"Hopf ideal ({D.name}, n={I.n})")
    rep.checked["dim I"] = I.dim
    for k, v in enumerate(I.spanning):
        if D.eps(v):
            rep.fail("eps(I) = 0", k)
        if Q.pi(D.antipode(v)):
            rep.fail("S(I) in I", k)
        if Q.pi2(D.comul(v)):
            rep.fail("Delta(I) in I(x)D + D(x)I", k)
    rep.count("spanning vectors", len(I.spanning))
    if star and D.has_star:
        closed = True
        for k, v in enumerate(I.spanning):
            if Q.pi(D.star(v)):
                closed = False
                rep.fail("star(I) in I", k)
                break
        Q.star_closed = closed
    return rep


def quotient_hopf(D: HopfAlgebra, z: dict, n: int, R: dict | None = None, *, gens=None,
                  prefer=None, check=True):
    """(Q, Rbar, ideal_report): the quotient, pushed R-matrix, and the ideal report.

    ``prefer`` steers the complement (see central_hopf_ideal)."""
    I = central_hopf_ideal(D, z, n, gens=gens, prefer=prefer, check=check)
    Q = QuotientHopf(D, I)
    rep = verify_hopf_ideal(Q) if check else Report("Hopf ideal (unchecked)")
    if Q.dim * n != D.dim:
        rep.fail("dim D = n dim(D/I)", (D.dim, Q.dim, n))
    Rbar = Q.pi2(R) if R is not None else None
    return Q, Rbar, rep


def quotient_basis_lemma33(D, Q: QuotientHopf, family, duals, *, drop=None) -> Report:
    """Both families {a_i E_{a_j x^k}} and {E_{a_i x^j} a_k} project to bases.

    ``family`` are the a_i in H, ``duals`` the functionals E_{a_j x^k} (on
    H's basis).  ``drop`` removes one member (negative control)."""
    rep = Report(f"quotient bases ({Q.name})")
    A = [D.embed_H(a) for a in family]
    E = [D.embed_dual(f) for f in duals]
    for label, gen in (("a_i E", lambda: (D.mul(a, e) for a in A for e in E)),
                       ("E a_k", lambda: (D.mul(e, a) for e in E for a in A))):
        ech = Echelon()
        count = 0
        for k, v in enumerate(gen()):
            if drop is not None and k == drop:
                continue
            ech.add(Q.pi(v))
            count += 1
        rep.checked[f"{label} members"] = count
        rep.checked[f"{label} rank"] = ech.rank
        if ech.rank != Q.dim or count != Q.dim:
            rep.fail(f"{{{label}}} is a basis of the quotient", (count, ech.rank, Q.dim))
    return rep


def quotient_isomorphism(Q1: QuotientHopf, Q2: QuotientHopf, *, gens=None) -> Report:
    """phi = pi2 o lift1 is an invertible algebra and coalgebra map Q1 -> Q2."""
    rep = Report("complement independence")
    one = Q1.one
    phi = [Q2.pi(Q1.lift({k: one})) for k in range(Q1.dim)]
    if rank_exact(phi) != Q2.dim:
        rep.fail("phi invertible", None)

    def ap(v):
        out = {}
        for k, c in v.items():
            axpy(out, phi[k], c)
        return out

    lefts = [(i, {i: one}) for i in range(Q1.dim)] if gens is None else list(enumerate(gens))
    for gi, g in lefts:
        pg = ap(g)
        for j in range(Q1.dim):
            if ap(Q1.mul(g, {j: one})) != Q2.mul(pg, phi[j]):
                rep.fail("phi multiplicative", (gi, j))
    for j in range(Q1.dim):
        lhs = {}
        for (a, b), c in Q1.comul_basis(j).items():
            for k, x in phi[a].items():
                for l, y in phi[b].items():
                    _tensor_add(lhs, (k, l), c * x * y)
        if lhs != Q2.comul(phi[j]):
            rep.fail("phi comultiplicative", j)
    rep.count("basis", Q1.dim)
    return rep
