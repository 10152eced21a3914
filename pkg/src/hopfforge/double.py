"""Drinfel'd double D(H) = (H*)^cop (x) H, its R-matrix, and the checks built on it.

Basis index ``a*d + b`` of D(H) stands for E_a (x) h_b, where {E_a} is the
dual basis of H*.  Products use

    (f h)(g k) = f [h1 -> g <- S^-1(h3)] h2 k,   <a -> g <- b, c> = g(b c a),

and the coproduct is that of (H*)^cop (x) H.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .hopf import (HopfAlgebra, HopfError, Report, StarAbsent, _tensor_add, convolve,
                   functional_power, hit_left, hit_right, is_character, is_group_like)
from .linalg import Echelon, axpy, rank_exact, rank_mod_p, scale
from .scalars import Cyc, ModularSpecialization

__all__ = [
    "DrinfeldDouble",
    "drinfeld_double",
    "QuasiData",
    "check_quasi",
    "fg_maps",
    "factorizability_rank",
    "is_factorizable",
    "drinfeld_u",
    "check_drinfeld_u",
    "RibbonWitness",
    "kr_conditions",
    "ribbon_search",
    "tensor_flip",
    "tensor_product_elements",
]


def tensor_flip(T: dict) -> dict:
    return {(j, i): c for (i, j), c in T.items()}


def tensor_product_elements(u: dict, v: dict) -> dict:
    out = {}
    for i, a in u.items():
        for j, b in v.items():
            c = a * b
            if c:
                out[(i, j)] = c
    return out


class DrinfeldDouble(HopfAlgebra):
    """Lazy Drinfel'd double of a (table-backed or lazy) Hopf algebra H."""

    def __init__(self, H: HopfAlgebra):
        d = H.dim
        labels = [f"E[{H.labels[a]}]{H.labels[b]}" for a in range(d) for b in range(d)]
        super().__init__(d * d, H.N, labels, name=f"D({H.name})")
        self.H = H
        self.d = d
        zero = H.zero
        # dual product E_a E_c = sum_e <Delta(h_e), (a, c)> E_e
        self._dprod: dict = {}
        for e in range(d):
            for (a, c), coef in H.comul_basis(e).items():
                self._dprod.setdefault((a, c), {})
                _tensor_add(self._dprod[(a, c)], e, coef)
        # transposed multiplication: a -> [(i, j, m_ij^a)]
        self._mt: dict = {a: [] for a in range(d)}
        for i in range(d):
            for j in range(d):
                for k, c in H.mul_basis(i, j).items():
                    self._mt[k].append((i, j, c))
        self.unit = {}
        for a in range(d):
            ea = H.counit[a]
            if ea:
                for k, u in H.unit.items():
                    self.unit[a * d + k] = ea * u
        self.counit = [H.unit.get(a, zero) * H.counit[b] if H.counit[b] else zero
                       for a in range(d) for b in range(d)]
        self._cross: dict = {}
        self._sinv_dual: dict = {}
        self.meta = {"kind": "double", "base": H.name}

    # -- embeddings ------------------------------------------------------------
    def embed_H(self, h: dict) -> dict:
        """h -> eps (x) h."""
        d = self.d
        out = {}
        for a in range(d):
            ea = self.H.counit[a]
            if ea:
                for b, c in h.items():
                    out[a * d + b] = ea * c
        return out

    def embed_dual(self, f: dict) -> dict:
        """f -> f (x) 1."""
        d = self.d
        out = {}
        for a, c in f.items():
            for k, u in self.H.unit.items():
                out[a * d + k] = c * u
        return out

    # -- the cross relation h_b E_c ---------------------------------------------
    def cross(self, b: int, c: int) -> dict:
        """h_b . E_c as a vector of D."""
        key = (b, c)
        r = self._cross.get(key)
        if r is None:
            self._fill_cross(b)
            r = self._cross[key]
        return r

    def _fill_cross(self, b: int):
        H, d = self.H, self.d
        rows = {c: {} for c in range(d)}
        for (u, vw), c1 in H.comul_basis(b).items():
            for (v, w), c2 in H.comul_basis(vw).items():
                coef = c1 * c2
                s = H.antipode_inverse_basis(w)
                # (h_u -> E_c <- S^-1 h_w)(h_y) = [S^-1(h_w) h_y h_u]_c
                for y in range(d):
                    left = H.mul(s, {y: H.one})
                    if not left:
                        continue
                    prod = H.mul(left, {u: H.one})
                    for cc, val in prod.items():
                        _tensor_add(rows[cc], y * d + v, coef * val)
        for c in range(d):
            self._cross[(b, c)] = rows[c]

    # -- structure --------------------------------------------------------------
    def _mul(self, i, j):
        d = self.d
        a, b = divmod(i, d)
        c, e = divmod(j, d)
        out = {}
        dprod = self._dprod
        H = self.H
        for yv, k in self.cross(b, c).items():
            y, v = divmod(yv, d)
            fp = dprod.get((a, y))
            if not fp:
                continue
            hp = H.mul_basis(v, e)
            if not hp:
                continue
            for f_idx, c1 in fp.items():
                kc1 = k * c1
                base = f_idx * d
                for h_idx, c2 in hp.items():
                    _tensor_add(out, base + h_idx, kc1 * c2)
        return out

    def _comul(self, i):
        d = self.d
        a, b = divmod(i, d)
        out = {}
        Db = self.H.comul_basis(b)
        for x, y, m in self._mt[a]:
            # Delta_{H*}(E_a) = sum m_xy^a E_x (x) E_y; cop flips it
            for (u, v), c in Db.items():
                _tensor_add(out, (y * d + u, x * d + v), m * c)
        return out

    def _dual_sinv(self, a):
        """E_a o S^-1 as a functional."""
        r = self._sinv_dual.get(a)
        if r is None:
            H = self.H
            r = {}
            for y in range(H.dim):
                c = H.antipode_inverse_basis(y).get(a)
                if c:
                    r[y] = c
            self._sinv_dual[a] = r
        return r

    def _antipode(self, i):
        d = self.d
        a, b = divmod(i, d)
        return self.mul(self.embed_H(self.H.antipode_basis(b)), self.embed_dual(self._dual_sinv(a)))

    @property
    def has_star(self):
        return self.H.has_star

    def dual_star(self, a):
        """(E_a)*: y -> conj E_a(S(y)*)."""
        H = self.H
        r = {}
        for y in range(H.dim):
            c = H.star(H.antipode_basis(y)).get(a)
            if c:
                r[y] = c.conj()
        return r

    def _star(self, i):
        if not self.H.has_star:
            raise StarAbsent("base algebra has no star")
        d = self.d
        a, b = divmod(i, d)
        return self.mul(self.embed_H(self.H.star_basis(b)), self.embed_dual(self.dual_star(a)))

    # -- R-matrix -----------------------------------------------------------
    def R(self) -> dict:
        """R = sum_i (eps (x) h_i) (x) (E_i (x) 1)."""
        d = self.d
        out = {}
        for i in range(d):
            left = self.embed_H({i: self.H.one})
            right = self.embed_dual({i: self.H.one})
            for I, c1 in left.items():
                for J, c2 in right.items():
                    _tensor_add(out, (I, J), c1 * c2)
        return out

    def r21r(self) -> dict:
        """R21 R = sum_{k,i} (E_k h_i) (x) (h_k E_i), via the cross relation."""
        d = self.d
        out = {}
        for k in range(d):
            for i in range(d):
                for J, c in self.cross(k, i).items():
                    out[(k * d + i, J)] = c
        return out

    def generators(self):
        """Images of the generators of H and of a basis of H* (dual side)."""
        one = self.H.one
        gens = [self.embed_H(g) for g in getattr(self.H, "generators", [{i: one} for i in range(self.d)])]
        dual_gens = getattr(self.H, "dual_generators", None)
        if dual_gens is None:
            dual_gens = [{a: one} for a in range(self.d)]
        gens += [self.embed_dual(f) for f in dual_gens]
        return gens


def drinfeld_double(H: HopfAlgebra):
    """(D, R, embed_dual, embed_H)."""
    D = DrinfeldDouble(H)
    return D, D.R(), D.embed_dual, D.embed_H


@dataclass
class QuasiData:
    H: HopfAlgebra
    R: dict
    meta: dict = dc_field(default_factory=dict)
    _r21r: dict | None = None

    def r21r(self, explicit=False) -> dict:
        if explicit:
            return self.H.tensor_mul(tensor_flip(self.R), self.R)
        if self._r21r is None:
            if isinstance(self.H, DrinfeldDouble) and self.meta.get("canonical", True):
                self._r21r = self.H.r21r()
            elif hasattr(self.H, "project_r21r") and self.meta.get("pushed"):
                self._r21r = self.H.project_r21r()
            else:
                self._r21r = self.H.tensor_mul(tensor_flip(self.R), self.R)
        return self._r21r


def _tensor3_mul(H, X, Y):
    out = {}
    for (i, j, k), a in X.items():
        for (l, m, n), b in Y.items():
            p1 = H.mul_basis(i, l)
            if not p1:
                continue
            p2 = H.mul_basis(j, m)
            if not p2:
                continue
            p3 = H.mul_basis(k, n)
            if not p3:
                continue
            ab = a * b
            for x, c1 in p1.items():
                for y, c2 in p2.items():
                    c12 = ab * c1 * c2
                    for z, c3 in p3.items():
                        _tensor_add(out, (x, y, z), c12 * c3)
    return out


def check_quasi(Q: QuasiData, *, hs=None, name=None) -> Report:
    """The three quasitriangularity axioms plus invertibility of R.

    ``hs`` restricts the Delta^op(h) R = R Delta(h) check to the given
    elements (generators suffice since both sides are multiplicative in h).
    """
    H, R = Q.H, Q.R
    rep = Report(name or f"quasitriangular ({H.name})")
    one = H.one
    # (Delta (x) id) R = R13 R23
    lhs = {}
    for (i, j), c in R.items():
        for (a, b), c2 in H.comul_basis(i).items():
            _tensor_add(lhs, (a, b, j), c * c2)
    unit = H.unit
    R13 = {}
    R23 = {}
    R12 = {}
    for (i, j), c in R.items():
        for u, cu in unit.items():
            _tensor_add(R13, (i, u, j), c * cu)
            _tensor_add(R23, (u, i, j), c * cu)
            _tensor_add(R12, (i, j, u), c * cu)
    if lhs != _tensor3_mul(H, R13, R23):
        rep.fail("(Delta x id)(R) = R13 R23", None)
    rhs = {}
    for (i, j), c in R.items():
        for (a, b), c2 in H.comul_basis(j).items():
            _tensor_add(rhs, (i, a, b), c * c2)
    if rhs != _tensor3_mul(H, R13, R12):
        rep.fail("(id x Delta)(R) = R13 R12", None)
    rep.count("coproduct axioms", 2)
    # invertibility: R^-1 = (S x id)(R)
    Rinv = {}
    for (i, j), c in R.items():
        for a, c2 in H.antipode_basis(i).items():
            _tensor_add(Rinv, (a, j), c * c2)
    ones = tensor_product_elements(unit, unit)
    if H.tensor_mul(R, Rinv) != ones or H.tensor_mul(Rinv, R) != ones:
        rep.fail("R invertible with inverse (S x id)(R)", None)
    hs = [(i, {i: one}) for i in range(H.dim)] if hs is None else list(enumerate(hs))
    for idx, h in hs:
        D = H.comul(h)
        if H.tensor_mul(tensor_flip(D), R) != H.tensor_mul(R, D):
            rep.fail("Delta^op(h) R = R Delta(h)", idx)
    rep.count("Delta^op(h) R = R Delta(h)", len(hs))
    return rep


def fg_maps(Q: QuasiData):
    """Sparse matrices of f_{R21R} and g_{R21R}.

    f(E_a) = (E_a x id)(R21R) has column a equal to row a of the coefficient
    matrix M of R21R; g is its transpose.  Returned as dicts {(row, col): c}.
    """
    M = Q.r21r()
    f = {(j, i): c for (i, j), c in M.items()}
    g = dict(M)
    return f, g


def factorizability_rank(Q: QuasiData, *, exact=None, spec=None):
    """(rank_f, rank_g, method).  Modular rank is a certified lower bound;
    full rank therefore certifies factorizability.  Deficient modular ranks
    fall back to exact elimination when the size allows."""
    d = Q.H.dim
    f, g = fg_maps(Q)
    if exact is None:
        exact = d <= 250
    if exact:
        rows_f: dict = {}
        rows_g: dict = {}
        for (i, j), c in f.items():
            rows_f.setdefault(i, {})[j] = c
        for (i, j), c in g.items():
            rows_g.setdefault(i, {})[j] = c
        return rank_exact(rows_f.values()), rank_exact(rows_g.values()), "exact"
    spec = spec or ModularSpecialization(Q.H.N)
    rf = rank_mod_p(f, d, d, spec)
    rg = rank_mod_p(g, d, d, spec)
    method = f"mod {spec.P}"
    if (rf < d or rg < d) and d <= 600:
        return factorizability_rank(Q, exact=True)[:2] + ("exact (modular rank deficient)",)
    return rf, rg, method


def is_factorizable(Q: QuasiData, **kw) -> bool:
    rf, rg, _ = factorizability_rank(Q, **kw)
    if rf != rg:
        raise HopfError(f"rank(f) = {rf} differs from rank(g) = {rg}")
    return rf == Q.H.dim


def drinfeld_u(Q: QuasiData):
    """u = sum S(R2) R1 and u^-1 = sum R2 S^2(R1)."""
    H = Q.H
    u = {}
    uinv = {}
    for (i, j), c in Q.R.items():
        axpy(u, H.mul(H.antipode_basis(j), {i: H.one}), c)
        s2 = H.antipode(H.antipode_basis(i))
        axpy(uinv, H.mul({j: H.one}, s2), c)
    return u, uinv


def check_drinfeld_u(Q: QuasiData, hs=None) -> Report:
    H = Q.H
    rep = Report(f"Drinfeld element ({H.name})")
    u, uinv = drinfeld_u(Q)
    if H.mul(u, uinv) != H.unit or H.mul(uinv, u) != H.unit:
        rep.fail("u u^-1 = 1", None)
    if H.eps(u) != H.one:
        rep.fail("eps(u) = 1", None)
    hs = [(i, {i: H.one}) for i in range(H.dim)] if hs is None else list(enumerate(hs))
    for idx, h in hs:
        if H.mul(H.mul(u, h), uinv) != H.antipode(H.antipode(h)):
            rep.fail("S^2(h) = u h u^-1", idx)
    rep.count("S^2 conjugation", len(hs))
    return rep


@dataclass
class RibbonWitness:
    a: dict
    beta: dict
    v: dict
    ell: dict
    labels: tuple = ()
    theta: dict = dc_field(default_factory=dict)
    report: Report | None = None


def _char_inverse(H, beta):
    """beta^-1 = beta o S."""
    out = {}
    for i in range(H.dim):
        acc = H.zero
        for j, c in H.antipode_basis(i).items():
            b = beta.get(j)
            if b:
                acc = acc + c * b
        if acc:
            out[i] = acc
    return out


def _grouplike_inverse(H, a):
    return H.antipode(a)


def kr_conditions(H: HopfAlgebra, a: dict, beta: dict, g: dict, alpha: dict) -> bool:
    """a^2 = g, beta^2 = alpha, S^2(h) = a (beta -> h <- beta^-1) a^-1 on the basis."""
    if H.mul(a, a) != g:
        return False
    if convolve(H, beta, beta) != alpha:
        return False
    ainv = _grouplike_inverse(H, a)
    binv = _char_inverse(H, beta)
    for i in range(H.dim):
        h = {i: H.one}
        mid = hit_right(H, hit_left(H, beta, h), binv)
        if H.mul(H.mul(a, mid), ainv) != H.antipode(H.antipode(h)):
            return False
    return True


def _group_like_in_double(D: DrinfeldDouble, beta: dict, a: dict) -> dict:
    return D.mul(D.embed_dual(beta), D.embed_H(a))


def ribbon_search(Q: QuasiData, candidates_a, candidates_beta, *, g=None, alpha=None,
                  check_delta=True, hs=None):
    """Search (a, beta) satisfying the Kauffman-Radford criterion for D(H);
    then test v = u l^-1 over the central group-likes l = beta^{+-1} a^{+-1}
    against the ribbon axioms.  Returns a RibbonWitness or None."""
    D = Q.H
    if not isinstance(D, DrinfeldDouble):
        raise HopfError("ribbon_search expects the double of a Hopf algebra")
    H = D.H
    if g is None or alpha is None:
        from .hopf import distinguished_grouplikes
        g, alpha = distinguished_grouplikes(H)
    u, uinv = drinfeld_u(Q)
    for a in candidates_a:
        for beta in candidates_beta:
            if not kr_conditions(H, a, beta, g, alpha):
                continue
            ainv = _grouplike_inverse(H, a)
            binv = _char_inverse(H, beta)
            for bb in (beta, binv):
                for aa in (a, ainv):
                    ell = _group_like_in_double(D, bb, aa)
                    ell_inv = D.antipode(ell)
                    v = D.mul(u, ell_inv)
                    rep = check_ribbon_element(Q, v, u, hs=hs, check_delta=check_delta)
                    if rep.ok:
                        return RibbonWitness(a=a, beta=beta, v=v, ell=ell, report=rep)
    return None


def check_ribbon_element(Q: QuasiData, v: dict, u: dict | None = None, *, hs=None,
                         check_delta=True) -> Report:
    """Central, S(v) = v, eps(v) = 1, v^2 = u S(u), Delta(v) = (R21R)^-1 (v x v)."""
    A = Q.H
    rep = Report(f"ribbon element ({A.name})")
    if u is None:
        u, _ = drinfeld_u(Q)
    gens = [(i, {i: A.one}) for i in range(A.dim)] if hs is None else list(enumerate(hs))
    for idx, h in gens:
        if A.mul(v, h) != A.mul(h, v):
            rep.fail("central", idx)
            return rep
    rep.count("centrality", len(gens))
    if A.antipode(v) != v:
        rep.fail("S(v) = v", None)
    if A.eps(v) != A.one:
        rep.fail("eps(v) = 1", None)
    if A.mul(v, v) != A.mul(u, A.antipode(u)):
        rep.fail("v^2 = u S(u)", None)
    if check_delta and rep.ok:
        # Delta(v) (R21R) = v (x) v  (equivalent form, no inverse needed)
        lhs = A.tensor_mul(A.comul(v), Q.r21r())
        if lhs != tensor_product_elements(v, v):
            rep.fail("Delta(v) = (R21R)^-1 (v x v)", None)
        rep.count("coproduct axiom", 1)
    return rep
