"""Builders for the named Hopf algebras.

Basis conventions (stable, used by golden files):

* group algebra: basis g in group index order;
* function algebra: basis e_g in group index order;
* abelian extension k^G #_{sigma,tau} kF: e_g # f at index g*|F| + f;
* n-rank Taft algebra: PBW monomials x_1^k1 .. x_n^kn g_1^t1 .. g_n^tn in
  mixed radix l over (k_1, .., k_n, t_1, .., t_n), k_1 most significant.
"""
from __future__ import annotations

import itertools
import warnings
from fractions import Fraction

from .groups import (FiniteGroup, GroupError, MatchedPairData, cyclic, semidirect,
                     validate_matched_pair)
from .hopf import HopfData, HopfError, _tensor_add
from .linalg import axpy, rank_exact
from .scalars import Cyc, order_of

__all__ = [
    "group_algebra",
    "function_algebra",
    "abelian_extension",
    "build_A_G_sigma_n",
    "build_script_A_l",
    "script_A_l_data",
    "taft",
    "taft_index",
    "taft_averaging_elements",
    "taft_characters",
    "encode_vector",
    "decode_vector",
]


def encode_vector(v: dict):
    return [[i, c.to_json()] for i, c in sorted(v.items())]


def decode_vector(obj) -> dict:
    return {int(i): Cyc.from_json(c) for i, c in obj}


def _attach(H, **meta):
    H.meta.update(meta)
    return H


def group_algebra(G: FiniteGroup, N: int = 1) -> HopfData:
    n = G.order
    one = Cyc.one(N)
    mult = {(a, b): {G.mul(a, b): one} for a in range(n) for b in range(n)}
    comult = {a: {(a, a): one} for a in range(n)}
    anti = {a: {G.inv(a): one} for a in range(n)}
    star = {a: {G.inv(a): one} for a in range(n)}
    counit = [one] * n
    H = HopfData(n, N, mult, {G.identity: one}, counit, comult, anti, star,
                 labels=list(G.labels), name=f"kG(order {n})")
    H.generators = [{a: one} for a in range(n)]
    return _attach(H, kind="group_algebra")


def function_algebra(G: FiniteGroup, N: int = 1) -> HopfData:
    n = G.order
    one, zero = Cyc.one(N), Cyc.zero(N)
    mult = {(a, a): {a: one} for a in range(n)}
    comult = {g: {(h, G.mul(G.inv(h), g)): one for h in range(n)} for g in range(n)}
    anti = {g: {G.inv(g): one} for g in range(n)}
    star = {g: {g: one} for g in range(n)}
    counit = [one if g == G.identity else zero for g in range(n)]
    H = HopfData(n, N, mult, {g: one for g in range(n)}, counit, comult, anti, star,
                 labels=[f"e[{lab}]" for lab in G.labels], name=f"k^G(order {n})")
    H.generators = [{a: one} for a in range(n)]
    return _attach(H, kind="function_algebra")


def abelian_extension(data: MatchedPairData, *, star=None, validate=True,
                      literal_star=False) -> HopfData:
    """k^G #_{sigma,tau} kF.  The star is installed when sigma and tau take
    root-of-unity values (``star=None``) or when forced with ``star=True``.

    The involution is (e_g#f)* = conj(sigma(g,f,f^-1)) e_{g<|f} # f^-1, which
    is what antimultiplicativity forces; ``literal_star`` uses sigma itself
    (the two agree when sigma is real, e.g. sigma = 1)."""
    if validate:
        fails = validate_matched_pair(data)
        if fails:
            raise GroupError(f"invalid matched pair: {fails[:5]}")
    G, F, N = data.G, data.F, data.N
    nG, nF = G.order, F.order
    one, zero = Cyc.one(N), Cyc.zero(N)
    lt, rt = data.left, data.right

    def idx(g, f):
        return g * nF + f

    S = {}
    T = {}
    for g in range(nG):
        for f in range(nF):
            for f2 in range(nF):
                S[g, f, f2] = data.sigma(g, f, f2)
    for g in range(nG):
        for g2 in range(nG):
            for f in range(nF):
                T[g, g2, f] = data.tau(g, g2, f)
    mult = {}
    for g in range(nG):
        for f in range(nF):
            g2 = lt(g, f)
            for f2 in range(nF):
                c = S[g, f, f2]
                if c:
                    mult[(idx(g, f), idx(g2, f2))] = {idx(g, F.mul(f, f2)): c}
    comult = {}
    for g in range(nG):
        for f in range(nF):
            out = {}
            for g1 in range(nG):
                g2 = G.mul(G.inv(g1), g)
                c = T[g1, g2, f]
                if c:
                    _tensor_add(out, (idx(g1, rt(g2, f)), idx(g2, f)), c)
            comult[idx(g, f)] = out
    anti = {}
    for g in range(nG):
        gi = G.inv(g)
        for f in range(nF):
            gf = rt(g, f)
            c = S[gi, gf, F.inv(gf)].inv() * T[gi, g, f].inv()
            anti[idx(g, f)] = {idx(G.inv(lt(g, f)), F.inv(gf)): c}
    unit = {idx(g, F.identity): one for g in range(nG)}
    counit = [one if g == G.identity else zero for g in range(nG) for f in range(nF)]
    unitary = all(order_of(v) is not None for v in list(S.values()) + list(T.values()))
    if star is None:
        star = unitary
    star_t = None
    if star:
        if not unitary:
            raise HopfError("star requires |sigma| = |tau| = 1")
        star_t = {}
        for g in range(nG):
            for f in range(nF):
                finv = F.inv(f)
                c = S[g, f, finv] if literal_star else S[g, f, finv].conj()
                star_t[idx(g, f)] = {idx(lt(g, f), finv): c}
    labels = [f"e[{G.labels[g]}]#{F.labels[f]}" for g in range(nG) for f in range(nF)]
    H = HopfData(nG * nF, N, mult, unit, counit, comult, anti, star_t, labels,
                 name=f"k^G#kF({nG}x{nF})")
    # generators: e_g # 1 and sum_g e_g # f
    gens = [{idx(g, F.identity): one} for g in range(nG)]
    for f in range(nF):
        if f != F.identity:
            gens.append({idx(g, f): one for g in range(nG)})
    H.generators = gens
    return _attach(H, kind="abelian_extension", G_order=nG, F_order=nF)


def build_A_G_sigma_n(G: FiniteGroup, b: int, sigma, n: int, N: int | None = None,
                      omega_power: int = 1):
    """A(G, sigma, n) with its character chi and group-like x.

    ``sigma(g, i, j)`` is evaluated on F = Z_n written additively; chi sends
    e_g to delta_{g,b} and x to omega = zeta_n^omega_power.
    """
    if G.element_order(b) != n:
        raise GroupError(f"element {b} has order {G.element_order(b)}, expected {n}")
    if N is None:
        N = n
    if N % n:
        raise GroupError("conductor must be a multiple of n")
    F = cyclic(n)
    F.labels = [f"x^{i}" for i in range(n)]
    one = Cyc.one(N)
    conj = []
    for i in range(n):
        bi = G.power(b, i)
        bii = G.inv(bi)
        conj.append([G.mul(G.mul(bi, g), bii) for g in range(G.order)])
    data = MatchedPairData(
        G, F,
        left=lambda g, f: conj[f][g],
        right=lambda g, f: f,
        sigma=sigma,
        tau=lambda g, g2, f: one,
        N=N,
    )
    H = abelian_extension(data)
    omega = Cyc.zeta(N, (N // n) * omega_power)
    if order_of(omega) != n:
        raise GroupError("omega is not a primitive n-th root of unity")
    chi = {b * n + j: omega ** j for j in range(n)}
    x = {g * n + 1: one for g in range(G.order)}
    H.name = f"A(G,sigma,{n})"
    H.meta.update(kind="A_G_sigma_n", n=n, b=b, omega_power=omega_power,
                  chi=encode_vector(chi), x=encode_vector(x), order=n)
    H.matched_pair = data
    return H, chi, x


def script_A_l_data(p: int, q: int, t: int, l: int, N: int | None = None) -> MatchedPairData:
    if p % q != 1:
        raise GroupError("need p = 1 mod q")
    if not (0 <= l <= q - 1):
        raise GroupError("need 0 <= l <= q-1")
    G = semidirect(p, q, t)
    if N is None:
        N = p * q
    omega = Cyc.zeta(N, N // q)
    F = cyclic(q)
    F.labels = [f"g^{i}" for i in range(q)]
    one = Cyc.one(N)
    # a^i b^j <| g^m = a^(i t^m) b^j
    left = [[((g // q) * pow(t, m, p) % p) * q + g % q for m in range(q)] for g in range(p * q)]
    powers = [omega ** k for k in range(q)]

    def sigma(g, m, n):
        j = g % q
        return powers[(j * l * ((m + n) // q)) % q]

    return MatchedPairData(G, F, left=lambda g, m: left[g][m], right=lambda g, m: m,
                           sigma=sigma, tau=lambda g, g2, f: one, N=N,
                           meta={"p": p, "q": q, "t": t, "l": l})


def build_script_A_l(p: int, q: int, t: int, l: int, N: int | None = None):
    """The abelian extension A_l over G = Z_p x| Z_q, F = Z_q.

    Returns (H, chi, x) with chi(e_g) = delta_{g,b}, chi(x) = omega.
    """
    data = script_A_l_data(p, q, t, l, N)
    H = abelian_extension(data)
    N = data.N
    b = 1  # a^0 b^1
    omega = Cyc.zeta(N, N // q)
    chi = {b * q + j: omega ** j for j in range(q)}
    x = {g * q + 1: Cyc.one(N) for g in range(p * q)}
    H.name = f"A_{l}(p={p},q={q},t={t})"
    H.meta.update(kind="script_A_l", p=p, q=q, t=t, l=l, b=b, n=q,
                  chi=encode_vector(chi), x=encode_vector(x), order=q)
    H.matched_pair = data
    return H, chi, x


# -- n-rank Taft algebra --------------------------------------------------------

def taft_index(l: int, n: int, k, t) -> int:
    idx = 0
    for v in tuple(k) + tuple(t):
        idx = idx * l + (v % l)
    return idx


def _taft_unindex(l, n, idx):
    digits = []
    for _ in range(2 * n):
        digits.append(idx % l)
        idx //= l
    digits.reverse()
    return tuple(digits[:n]), tuple(digits[n:])


def _taft_label(k, t):
    parts = [f"x{i + 1}^{v}" for i, v in enumerate(k) if v]
    parts += [f"g{i + 1}^{v}" for i, v in enumerate(t) if v]
    return "*".join(parts) if parts else "1"


def taft(l: int, n: int, q_root=1, N: int | None = None):
    """The n-rank Taft algebra with q = q_root (a Cyc, or an exponent k
    meaning zeta_l^k).  Returns (H, chi) with chi(x_i) = 0, chi(g_i) = q."""
    if l < 2 or n < 1:
        raise HopfError("need l >= 2 and n >= 1")
    if N is None:
        N = l if not isinstance(q_root, Cyc) else q_root.N
    if isinstance(q_root, Cyc):
        q = q_root
        if q.N != N:
            raise HopfError("q_root conductor differs from N")
    else:
        if N % l:
            raise HopfError("conductor must be a multiple of l")
        q = Cyc.zeta(N, (N // l) * q_root)
    if order_of(q) != l:
        raise HopfError(f"q_root is not a primitive {l}-th root of unity")
    if l % 2 == 0:
        warnings.warn("even l: the factorizable quotient construction needs l odd", stacklevel=2)
    one, zero = Cyc.one(N), Cyc.zero(N)
    qp = [q ** e for e in range(l)]
    dim = l ** (2 * n)
    monos = [_taft_unindex(l, n, i) for i in range(dim)]

    def e(i, j):
        return 1 if i >= j else -1

    mult = {}
    for a, (k, t) in enumerate(monos):
        for b, (k2, t2) in enumerate(monos):
            if any(k[i] + k2[i] >= l for i in range(n)):
                continue
            E = 0
            for i in range(n):
                for j in range(n):
                    E += t[i] * k2[j] * e(i, j)
                    if i > j:
                        E += k[i] * k2[j]
            kk = tuple(k[i] + k2[i] for i in range(n))
            tt = tuple((t[i] + t2[i]) % l for i in range(n))
            mult[(a, b)] = {taft_index(l, n, kk, tt): qp[E % l]}
    zero_k = (0,) * n
    unit = {taft_index(l, n, zero_k, zero_k): one}
    counit = [one if k == zero_k else zero for (k, t) in monos]
    labels = [_taft_label(k, t) for k, t in monos]
    H = HopfData(dim, N, mult, unit, counit, {}, {}, None, labels, name=f"Taft(l={l},n={n})")

    def unit_vec(j):
        return tuple(1 if i == j else 0 for i in range(n))

    xs = [taft_index(l, n, unit_vec(i), zero_k) for i in range(n)]
    gs = [taft_index(l, n, zero_k, unit_vec(i)) for i in range(n)]
    one_idx = taft_index(l, n, zero_k, zero_k)
    comult = {}
    anti = {}
    # Delta and S by recursion on the first nonzero x exponent
    for a in sorted(range(dim), key=lambda a: sum(monos[a][0])):
        k, t = monos[a]
        if k == zero_k:
            comult[a] = {(a, a): one}
            tinv = tuple((-v) % l for v in t)
            anti[a] = {taft_index(l, n, zero_k, tinv): one}
            continue
        j = next(i for i in range(n) if k[i])
        rest = taft_index(l, n, tuple(k[i] - (i == j) for i in range(n)), t)
        dx = {(xs[j], one_idx): one, (gs[j], xs[j]): one}
        comult[a] = H.tensor_mul(dx, comult[rest])
        # S(x_j * rest) = S(rest) S(x_j), S(x_j) = -g_j^{-1} x_j
        ginv = taft_index(l, n, zero_k, tuple((l - 1) if i == j else 0 for i in range(n)))
        sx = H.mul({ginv: -one}, {xs[j]: one})
        anti[a] = H.mul(anti[rest], sx)
    H._comult_t = comult
    H._anti_t = anti
    H._comul_cache.clear()
    H._s_cache.clear()
    chi = {taft_index(l, n, zero_k, t): qp[sum(t) % l] for (k, t) in monos if k == zero_k}
    H.generators = [{i: one} for i in xs + gs]
    H.meta.update(kind="taft", l=l, n=n, order=l, chi=encode_vector(chi),
                  x=encode_vector({gs[-1]: one}), q=q.to_json())
    H.taft_params = (l, n, q)
    return H, chi


def taft_characters(H) -> list:
    """All characters of the n-rank Taft algebra: chi(x_i) = 0, chi(g_i) = q^{s_i}."""
    l, n, q = H.taft_params
    out = []
    for s in itertools.product(range(l), repeat=n):
        phi = {}
        for t in itertools.product(range(l), repeat=n):
            phi[taft_index(l, n, (0,) * n, t)] = q ** (sum(a * b for a, b in zip(s, t)) % l)
        out.append((s, phi))
    return out


def taft_grouplikes(H) -> list:
    l, n, q = H.taft_params
    one = Cyc.one(H.N)
    return [(t, {taft_index(l, n, (0,) * n, t): one}) for t in itertools.product(range(l), repeat=n)]


def taft_averaging_elements(H):
    """The family e_{(i),(j)} (averages over x-monomials and g_1..g_{n-1}).

    Returns (labels, vectors, basis_rank) where basis_rank is the rank of
    {e_{(i),(j)} g_n^{j_n}}; it equals dim H exactly when the family times
    powers of g_n is a basis.
    """
    l, n, q = H.taft_params
    N = H.N
    norm = Cyc(N, Fraction(1, l ** (2 * n - 1)))
    qp = [q ** e for e in range(l)]
    labels = []
    vecs = []
    for i in itertools.product(range(l), repeat=n):
        for j in itertools.product(range(l), repeat=n - 1):
            v = {}
            for k in itertools.product(range(l), repeat=n):
                for t in itertools.product(range(l), repeat=n - 1):
                    E = sum(a * b for a, b in zip(i, k)) + sum(a * b for a, b in zip(j, t))
                    idx = taft_index(l, n, k, tuple(t) + (0,))
                    _tensor_add(v, idx, qp[E % l] * norm)
            labels.append((i, j))
            vecs.append(v)
    gn = [taft_index(l, n, (0,) * n, (0,) * (n - 1) + (s,)) for s in range(l)]
    full = []
    for v in vecs:
        for s in range(l):
            full.append(H.mul(v, {gn[s]: Cyc.one(N)}))
    return labels, vecs, rank_exact(full)
