"""The factorizable quotient A_{p,q} = D(A_0)/I and its simple modules.

Group elements a^i b^j have index i*q + j; the quotient basis is
pi(E_{g;x^k} (x) e_h) at position (g*q + k)*p*q + h.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from ..constructors import build_script_A_l
from ..double import QuasiData, drinfeld_double
from ..hopf import Report, dual, left_integral
from ..quotient import QuotientHopf, central_hopf_ideal, verify_hopf_ideal
from ..scalars import Cyc
from .reps import (Rep, RepError, end_dim, intertwiners, mat_identity, rep_from_generators,
                   set_normalized_integral)

__all__ = [
    "ApqAlgebra",
    "build_apq",
    "verify_presentation_thm46",
    "SimpleLabel",
    "canonical_label",
    "coset_rep",
    "primitive_root",
    "enumerate_labels",
    "build_simple",
    "build_simples_apq",
    "paper_rank_formula",
    "install_integral",
    "label_dim",
    "family_operators",
    "check_simple",
    "hom_dim",
]


def primitive_root(p: int) -> int:
    """Smallest generator of Z_p^x."""
    for g in range(2, p):
        if len({pow(g, k, p) for k in range(1, p)}) == p - 1:
            return g
    if p == 2:
        return 1
    raise ValueError(f"{p} has no primitive root")


@dataclass
class ApqAlgebra:
    p: int
    q: int
    t: int
    H: object
    D: object
    Q: QuotientHopf
    Rbar: dict
    ideal_report: Report
    x: dict = field(default_factory=dict)
    y: dict = field(default_factory=dict)
    chi: dict = field(default_factory=dict)
    z: list = field(default_factory=list)
    e: list = field(default_factory=list)

    @property
    def N(self):
        return self.Q.N

    @property
    def n(self):
        return self.p * self.q

    @property
    def generators(self) -> list:
        """x, y, z_0..z_{q-1}, e_g for all g, in that order."""
        return [self.x, self.y] + list(self.z) + list(self.e)

    def group_mul(self, g, h):
        return self.H.matched_pair.G.mul(g, h)

    def group_inv(self, g):
        return self.H.matched_pair.G.inv(g)

    def elem(self, i, j):
        return (i % self.p) * self.q + (j % self.q)

    def act_x(self, g, k=1):
        """g <| x^k."""
        return self.H.matched_pair.left(g, k % self.q)

    def position(self, g, k, h):
        return (g * self.q + k % self.q) * self.n + h

    def quasi(self) -> QuasiData:
        return QuasiData(self.Q, self.Rbar, meta={"pushed": True})


def build_apq(p: int, q: int, t: int, *, check=True) -> ApqAlgebra:
    """Quotient of D(A_0) by the ideal generated by chi x, with designated generators."""
    H, chi, x = build_script_A_l(p, q, t, 0)
    D, R, ed, eh = drinfeld_double(H)
    n = p * q
    z = D.mul(ed(chi), eh(x))
    prefer = [a * H.dim + h * q for a in range(H.dim) for h in range(n)]
    gens = D.generators()
    I = central_hopf_ideal(D, z, q, gens=gens, prefer=prefer, check=check)
    Q = QuotientHopf(D, I, name=f"A_{{{p},{q}}}")
    if Q.comp != prefer:
        raise RepError("quotient complement is not spanned by E_{g;x^k} e_h")
    rep = verify_hopf_ideal(Q) if check else Report("Hopf ideal (unchecked)")
    if not check:
        Q.star_closed = True
    one = H.one
    ctx = ApqAlgebra(p, q, t, H, D, Q, Q.pi2(R), rep)
    ctx.x = Q.pi(eh(x))
    a = 1 * q  # index of a = a^1 b^0
    ctx.y = Q.pi(ed({a * q + j: one for j in range(q)}))
    ctx.z = [Q.pi(ed({i: one})) for i in range(q)]
    ctx.e = [Q.pi(eh({g * q: one})) for g in range(n)]
    ctx.chi = Q.pi(ed(chi))
    Q.meta.update(kind="apq", p=p, q=q, t=t)
    return ctx


def install_integral(ctx: ApqAlgebra) -> dict:
    """Normalized integral of the quotient as the image of lambda (x) Lambda."""
    H = ctx.H
    lam_H = left_integral(H)
    Hd = dual(H)
    lam_dual = left_integral(Hd)
    D = ctx.D
    ed = D.embed_dual
    eh = D.embed_H
    big = D.mul(ed(lam_dual), eh(lam_H))
    return set_normalized_integral(ctx.Q, ctx.Q.pi(big), ctx.generators)


# presentation ----------------------------------------------------------------

def verify_presentation_thm46(ctx: ApqAlgebra) -> Report:
    """All algebra relations and Hopf/star formulas for x, y, z_i, e_g."""
    Q = ctx.Q
    p, q, t, n = ctx.p, ctx.q, ctx.t, ctx.n
    x, y, z, e = ctx.x, ctx.y, ctx.z, ctx.e
    rep = Report(f"presentation of A_{{{p},{q}}}")
    mul = Q.mul
    one, zero = Q.one, Q.zero
    unit = Q.unit

    def ypow(k):
        return Q.power(y, k % p)

    def xpow(k):
        return Q.power(x, k % q)

    def eq(name, lhs, rhs, witness=None):
        rep.count(name)
        if lhs != rhs:
            rep.fail(name, witness)

    def add(*vs):
        out = {}
        for v in vs:
            for k, c in v.items():
                s = out.get(k, zero) + c
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    def tadd(*ts):
        out = {}
        for T in ts:
            for k, c in T.items():
                s = out.get(k, zero) + c
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    def tens(u, v):
        return {(i, j): a * b for i, a in u.items() for j, b in v.items()}

    a = ctx.elem(1, 0)
    ainv = ctx.group_inv(a)
    eq("yx = xy^t", mul(y, x), mul(x, ypow(t)))
    for i in range(q):
        eq("z_i x = x z_i", mul(z[i], x), mul(x, z[i]), i)
        eq("z_i y = y z_i", mul(z[i], y), mul(y, z[i]), i)
        for j in range(q):
            eq("z_i z_j = delta z_i", mul(z[i], z[j]), z[i] if i == j else {}, (i, j))
    for g in range(n):
        eq("e_g x = x e_{g<|x}", mul(e[g], x), mul(x, e[ctx.act_x(g, 1)]), g)
        rhs = add(*[mul(z[i % q], e[ctx.group_mul(ctx.group_mul(ctx.act_x(ainv, i), g), a)])
                    for i in range(1, q + 1)])
        eq("e_g y = y sum_i z_i e_{(a^-1 <| x^i) g a}", mul(e[g], y), mul(y, rhs), g)
        for i in range(q):
            eq("e_g z_i = z_i e_g", mul(e[g], z[i]), mul(z[i], e[g]), (g, i))
        for h in range(n):
            eq("e_g e_h = delta e_g", mul(e[g], e[h]), e[g] if g == h else {}, (g, h))
    eq("x^q = 1", Q.power(x, q), unit)
    eq("y^p = 1", Q.power(y, p), unit)
    eq("sum z_i = 1", add(*z), unit)
    eq("sum e_g = 1", add(*e), unit)
    # coalgebra
    eq("Delta(x) = x (x) x", Q.comul(x), tens(x, x))
    eq("Delta(y) = sum_i y^{t^i} (x) y z_i", Q.comul(y),
       tadd(*[tens(ypow(pow(t, i, p)), mul(y, z[i % q])) for i in range(1, q + 1)]))
    for i in range(q):
        eq("Delta(z_i) = sum_j z_j (x) z_{i-j}", Q.comul(z[i]),
           tadd(*[tens(z[j], z[(i - j) % q]) for j in range(q)]), i)
    for g in range(n):
        eq("Delta(e_g) = sum_h e_h (x) e_{h^-1 g}", Q.comul(e[g]),
           tadd(*[tens(e[h], e[ctx.group_mul(ctx.group_inv(h), g)]) for h in range(n)]), g)
    eq("eps(x) = 1", Q.eps(x), one)
    eq("eps(y) = 1", Q.eps(y), one)
    for i in range(q):
        eq("eps(z_i) = delta_{i,0}", Q.eps(z[i]), one if i == 0 else zero, i)
    ident = ctx.elem(0, 0)
    for g in range(n):
        eq("eps(e_g) = delta_{g,1}", Q.eps(e[g]), one if g == ident else zero, g)
    # star
    xinv, yinv = xpow(-1), ypow(-1)
    eq("x* = x^-1", Q.star(x), xinv)
    eq("y* = y^-1", Q.star(y), yinv)
    for i in range(q):
        eq("z_i* = z_i", Q.star(z[i]), z[i], i)
    for g in range(n):
        eq("e_g* = e_g", Q.star(e[g]), e[g], g)
    # antipode
    eq("S(x) = x^-1", Q.antipode(x), xinv)
    tinv = pow(t, -1, p)
    eq("S(y) = sum_i y^{-t^-i} z_i", Q.antipode(y),
       add(*[mul(ypow(-pow(tinv, i, p)), z[i % q]) for i in range(1, q + 1)]))
    for i in range(q):
        eq("S(z_i) = z_{-i}", Q.antipode(z[i]), z[(-i) % q], i)
    for g in range(n):
        eq("S(e_g) = e_{g^-1}", Q.antipode(e[g]), e[ctx.group_inv(g)], g)
    # chi = x^-1 and generation
    eq("chi = x^-1", ctx.chi, xinv)
    from .reps import generator_plan
    plan = generator_plan(Q, ctx.generators)
    rep.checked["reached dimension"] = plan.reached
    if plan.reached != Q.dim:
        rep.fail("generators span A", plan.reached)
    return rep


# labels ------------------------------------------------------------------------

class SimpleLabel(NamedTuple):
    family: str
    idx: tuple

    def __str__(self):
        return f"{self.family}{self.idx}"

    def to_json(self):
        return [self.family, list(self.idx)]

    @classmethod
    def from_json(cls, obj):
        return cls(obj[0], tuple(obj[1]))


def coset_rep(v: int, p: int, q: int, t: int, beta: int):
    """(r, c) with v = beta^r t^c mod p, 1 <= r <= m, 0 <= c < q."""
    v %= p
    if v == 0:
        raise ValueError("zero has no coset representative")
    m = (p - 1) // q
    for r in range(1, m + 1):
        br = pow(beta, r, p)
        for c in range(q):
            if br * pow(t, c, p) % p == v:
                return r, c
    raise ValueError(f"{v} not of the form beta^r t^c (beta={beta}, t={t}, p={p})")


def canonical_label(fam: str, idx, p: int, q: int, t: int, beta: int) -> SimpleLabel:
    """Canonical representative; U and V first move their Z_p^x index to beta^r."""
    if fam == "T":
        i, j = idx
        return SimpleLabel("T", (i % q, j % q))
    if fam == "U":
        i, j = idx
        r, _ = coset_rep(j, p, q, t, beta)
        return SimpleLabel("U", (i % q, pow(beta, r, p)))
    if fam == "V":
        A, j, K = idx
        r, c = coset_rep(A, p, q, t, beta)
        return SimpleLabel("V", (pow(beta, r, p), j % q, K * pow(t, c, p) % p))
    if fam == "W":
        i, j, k = idx
        if (i - j) % q == 0:
            raise ValueError("W label needs i != j")
        return SimpleLabel("W", (i % q, j % q, k % q))
    raise ValueError(f"unknown family {fam}")


def enumerate_labels(p: int, q: int, t: int, beta: int) -> list:
    m = (p - 1) // q
    cosets = [pow(beta, r, p) for r in range(1, m + 1)]
    out = [SimpleLabel("T", (i, j)) for i in range(q) for j in range(q)]
    out += [SimpleLabel("U", (i, b)) for i in range(q) for b in cosets]
    out += [SimpleLabel("V", (b, j, k)) for b in cosets for j in range(q) for k in range(p)]
    out += [SimpleLabel("W", (i, j, k)) for i in range(q) for j in range(q) if i != j
            for k in range(q)]
    return out


def paper_rank_formula(p: int, q: int) -> int:
    return q * q * (p * p + q - 1)


def label_dim(label: SimpleLabel, p: int, q: int) -> int:
    return {"T": 1, "U": q, "V": q, "W": p}[label.family]


# simple modules ------------------------------------------------------------------

def _diag(vals):
    return {r: {r: v} for r, v in enumerate(vals) if v}


def _perm(n, target, coef=None):
    """Operator sending basis vector l to coef(l) * basis vector target(l)."""
    out = {}
    for l in range(n):
        out.setdefault(target(l), {})[l] = coef(l) if coef else None
    return out


def family_operators(ctx: ApqAlgebra, fam: str, idx) -> list:
    """Operators for x, y, z_0.., e_0.. (in the order of ctx.generators)."""
    p, q, t, n, N = ctx.p, ctx.q, ctx.t, ctx.n, ctx.N
    one, zero = Cyc.one(N), Cyc.zero(N)
    eta = Cyc.zeta(N, N // p)
    omega = Cyc.zeta(N, N // q)
    if fam == "T":
        i, j = idx
        dim = 1
        X = {0: {0: omega ** j}}
        Y = mat_identity(1, N)
        zw = [i % q]
        ew = [ctx.elem(0, i)]
    elif fam == "U":
        i, jp = idx
        dim = q
        X = _perm(q, lambda k: (k + 1) % q, lambda k: one)
        Y = _diag([eta ** (jp * pow(t, k, p) % p) for k in range(q)])
        zw = [i % q] * q
        ew = [ctx.elem(0, i)] * q
    elif fam == "V":
        A, j, K = idx
        dim = q
        tinv = pow(t, -1, p)
        X = _perm(q, lambda l: (l - 1) % q, lambda l: one)
        Y = _diag([eta ** (K * pow(tinv, l, p) % p) for l in range(q)])
        zw = [j % q] * q
        ew = [ctx.elem(A * pow(t, l, p), j) for l in range(q)]
    elif fam == "W":
        i, j, k = idx
        dim = p
        tinv = pow(t, -1, p)
        X = _perm(p, lambda l: tinv * l % p, lambda l: omega ** k)
        Y = _perm(p, lambda l: (l + 1) % p, lambda l: one)
        zw = [j % q] * p
        d = (pow(t, j % q, p) - pow(t, i % q, p)) % p
        ew = [ctx.elem(l * d, i) for l in range(p)]
    else:
        raise ValueError(fam)
    ops = [X, Y]
    for s in range(q):
        ops.append(_diag([one if w == s else zero for w in zw]))
    for g in range(n):
        ops.append(_diag([one if w == g else zero for w in ew]))
    return dim, ops


def build_simple(ctx: ApqAlgebra, label, *, check=True, beta=None) -> Rep:
    fam, idx = label
    dim, ops = family_operators(ctx, fam, idx)
    gens = list(zip(ctx.generators, ops))
    rep = rep_from_generators(ctx.Q, gens, dim=dim, label=SimpleLabel(fam, tuple(idx)),
                              unitary=True, check=False)
    if check:
        from .reps import check_module, check_unitary
        r = check_module(rep)
        if not r.ok:
            raise RepError(f"{label}: module axiom fails, witness {r.failures[0]}")
        r = check_unitary(rep)
        if not r.ok:
            raise RepError(f"{label}: not a star representation, witness {r.failures[0]}")
    return rep


def build_simples_apq(ctx: ApqAlgebra, beta: int | None = None, *, check=True) -> list:
    beta = primitive_root(ctx.p) if beta is None else beta
    return [build_simple(ctx, lab, check=check) for lab in
            enumerate_labels(ctx.p, ctx.q, ctx.t, beta)]


def check_simple(rep: Rep) -> bool:
    return end_dim(rep) == 1


def hom_dim(S: Rep, M: Rep) -> int:
    return len(intertwiners(S, M))
