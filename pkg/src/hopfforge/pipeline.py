"""End-to-end runs of the factorizable-quotient construction with certificates.

A certificate is a JSON-able dict: the parameters, the seed, a content hash of
the input algebra, every verification outcome and the headline numbers.  It
contains no timings, so re-runs with the same seed reproduce it exactly.
"""
from __future__ import annotations

import hashlib
import json
import logging

from .constructors import (build_script_A_l, decode_vector, taft, taft_averaging_elements,
                           taft_characters, taft_grouplikes)
from .double import (QuasiData, check_quasi, check_ribbon_element, drinfeld_double,
                     drinfeld_u, factorizability_rank, ribbon_search)
from .hopf import (HopfError, Report, check_hopf, check_star, distinguished_grouplikes,
                   centralizes, functional_power, hit_right, is_group_like, is_semisimple)
from .quotient import quotient_hopf, theorem31_verify

__all__ = [
    "infer_permutations",
    "run_pipeline",
    "pipeline_taft",
    "pipeline_apq",
    "certificate_hash",
]

log = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 300


def infer_permutations(H, family, x, chi):
    """sigma, tau with x a_i = a_sigma(i) x and a_i <- chi = a_tau^-1(i)."""
    m = len(family)
    keyed = {tuple(sorted(a.items())): i for i, a in enumerate(family)}
    sigma = [None] * m
    tau = [None] * m
    xinv = H.antipode(x)
    for i, a in enumerate(family):
        conj = H.mul(H.mul(x, a), xinv)
        j = keyed.get(tuple(sorted(conj.items())))
        if j is None:
            raise HopfError(f"x a_{i} x^-1 is not a family member")
        sigma[i] = j
        j = keyed.get(tuple(sorted(hit_right(H, a, chi).items())))
        if j is None:
            raise HopfError(f"a_{i} <- chi is not a family member")
        tau[j] = i
    return sigma, tau


def certificate_hash(cert: dict) -> str:
    blob = json.dumps({k: v for k, v in cert.items() if k != "certificate_sha256"},
                      sort_keys=True, default=str)
    return hashlib.sha256(blob.encode()).hexdigest()


def _summary(rep: Report) -> dict:
    return {"ok": rep.ok, "failures": [[w, repr(x)] for w, x in rep.failures[:10]],
            "checked": {k: v for k, v in rep.checked.items()}}


def run_pipeline(H, chi, x, family, *, kind, params, seed=1, ribbon_candidates=None,
                 sample=200, prefer=None):
    """Hypotheses, double, central group-like z = chi x, quotient, factorizability.

    Returns (certificate, context) where context holds the live objects
    (H, D, Q, pushed R, ...).
    """
    cert = {"kind": kind, "params": params, "seed": seed, "input_sha256": H.content_hash()}
    reports = {}
    log.info("hopf axioms for %s (dim %d)", H.name, H.dim)
    reports["input hopf"] = check_hopf(H) if H.dim <= 100 else check_hopf(H, sample=sample, seed=seed)
    if H.has_star:
        reports["input star"] = check_star(H)
    sigma, tau = infer_permutations(H, family, x, chi)
    reports["hypotheses"] = theorem31_verify(H, x, chi, family, sigma, tau)
    n = reports["hypotheses"].checked.get("order of x")
    log.info("double of dimension %d", H.dim ** 2)
    D, R, ed, eh = drinfeld_double(H)
    z = D.mul(ed(chi), eh(x))
    gens = D.generators()
    if D.dim <= EXHAUSTIVE_LIMIT:
        reports["double quasitriangular"] = check_quasi(QuasiData(D, R))
    log.info("quotient by the ideal generated by chi x (order %s)", n)
    Q, Rbar, ideal_rep = quotient_hopf(D, z, n, R, gens=gens, prefer=prefer)
    reports["hopf ideal"] = ideal_rep
    cert["z"] = {"group_like": is_group_like(D, z), "central": centralizes(D, z, gens), "order": n}
    qgens = [Q.pi(g) for g in gens]
    QQ = QuasiData(Q, Rbar, meta={"pushed": True})
    if Q.dim <= EXHAUSTIVE_LIMIT:
        reports["quotient hopf"] = check_hopf(Q)
        reports["quotient quasitriangular"] = check_quasi(QQ)
    else:
        reports["quotient hopf"] = check_hopf(Q, sample=sample, seed=seed)
    if D.has_star:
        cert["star"] = "ok" if Q.star_closed else "not star-closed"
        if Q.star_closed:
            reports["quotient star"] = check_star(Q, left_factors=qgens) if Q.dim <= 2000 \
                else Report("quotient star (inherited from a star-closed ideal)")
    else:
        cert["star"] = "absent"
    log.info("factorizability rank (dim %d)", Q.dim)
    rf, rg, method = factorizability_rank(QQ)
    cert["dims"] = {"H": H.dim, "D": D.dim, "quotient": Q.dim}
    cert["factorizable"] = rf == rg == Q.dim
    cert["rank"] = {"f": rf, "g": rg, "method": method}
    if Q.dim <= EXHAUSTIVE_LIMIT:
        cert["semisimple"] = is_semisimple(Q)
    ctx = {"H": H, "D": D, "R": R, "Q": Q, "Rbar": Rbar, "QQ": QQ, "qgens": qgens, "z": z}
    if ribbon_candidates == "drinfeld":
        from .reptheory.modular import ribbon_from_drinfeld
        w = ribbon_from_drinfeld(QQ, hs=qgens)
        ctx["ribbon"] = w
        cert["ribbon"] = "absent" if w is None else {"status": "found", "ell": "unit",
                                                     "quotient_check": _summary(w.report)}
    elif ribbon_candidates is not None:
        cert["ribbon"] = _ribbon(H, D, R, Q, QQ, qgens, gens, ribbon_candidates, ctx)
    else:
        cert["ribbon"] = "skipped"
    cert["checks"] = {k: _summary(v) for k, v in reports.items()}
    cert["ok"] = (all(v.ok for v in reports.values()) and cert["factorizable"]
                  and cert["ribbon"] not in ("absent",)
                  and cert["star"] != "not star-closed")
    cert["certificate_sha256"] = certificate_hash(cert)
    return cert, ctx


def _ribbon(H, D, R, Q, QQ, qgens, dgens, candidates, ctx):
    a_cands, b_cands = candidates
    g, alpha = distinguished_grouplikes(H)
    Qd = QuasiData(D, R)
    small = D.dim <= EXHAUSTIVE_LIMIT
    w = ribbon_search(Qd, a_cands, b_cands, g=g, alpha=alpha, check_delta=small,
                      hs=None if small else dgens)
    if w is None:
        return "absent"
    vbar = Q.pi(w.v)
    ubar, _ = drinfeld_u(QQ)
    rep = check_ribbon_element(QQ, vbar, ubar, hs=qgens, check_delta=Q.dim <= EXHAUSTIVE_LIMIT)
    ctx["ribbon"] = w
    ctx["ribbon_report"] = rep
    m = None
    for k in range(1, 2 * H.dim):
        if H.power(g, k) == w.a:
            m = k
            break
    return {
        "status": "found" if rep.ok else "fails in quotient",
        "a_is_g_power": m,
        "beta_is_alpha_power_m": m is not None and functional_power(H, alpha, m) == w.beta,
        "quotient_check": _summary(rep),
    }


def pipeline_taft(l: int, n: int, *, seed=1, ribbon=None, sample=200):
    """Taft family: H = n-rank Taft algebra, x = g_n, family of averaging elements."""
    H, chi = taft(l, n)
    x = decode_vector(H.meta["x"])
    _, family, rank = taft_averaging_elements(H)
    if ribbon is None:
        ribbon = n == 1
    cands = None
    if ribbon:
        cands = ([v for _, v in taft_grouplikes(H)], [phi for _, phi in taft_characters(H)])
    return run_pipeline(H, chi, x, family, kind="taft", params={"l": l, "n": n}, seed=seed,
                        ribbon_candidates=cands, sample=sample)


def pipeline_apq(p: int, q: int, t: int, *, seed=1, sample=200, ribbon=True):
    """Abelian-extension family A_0 over Z_p x| Z_q, x = sum_g e_g # x, family e_g # 1."""
    H, chi, x = build_script_A_l(p, q, t, 0)
    one = H.one
    family = [{g * q: one} for g in range(p * q)]
    prefer = [a * H.dim + h * q for a in range(H.dim) for h in range(p * q)]
    return run_pipeline(H, chi, x, family, kind="apq",
                        params={"p": p, "q": q, "t": t}, seed=seed, sample=sample,
                        prefer=prefer, ribbon_candidates="drinfeld" if ribbon else None)
