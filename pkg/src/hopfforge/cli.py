"""The ``forge`` command.

Exit codes: 0 every verification passed, 1 some verification failed,
2 usage or parameter error (including unreadable input files).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import persist
from .constructors import (abelian_extension, build_script_A_l, taft, taft_characters,
                           taft_grouplikes)
from .double import (QuasiData, check_quasi, check_ribbon_element, drinfeld_double,
                     drinfeld_u, factorizability_rank, ribbon_search)
from .groups import GroupError, matched_pair_from_json
from .hopf import HopfError, Report, StarAbsent, check_hopf, check_star, is_group_like
from .pipeline import pipeline_apq, pipeline_taft
from .reptheory.reps import RepError

log = logging.getLogger("hopfforge")

DESK_APQ = 7 ** 2 * 3 ** 3          # largest p^2 q^3 inside acceptance scope
DESK_TAFT = 3 ** 7                  # largest Taft quotient dimension in scope
SAMPLE_ABOVE = 300                  # check_hopf switches to seeded sampling above this


class UsageError(Exception):
    pass


def _emit(args, payload: dict, lines):
    for line in lines:
        print(line)
    if getattr(args, "json", None):
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=1, sort_keys=True, default=str)


def _report_lines(rep: Report):
    return str(rep).splitlines()


def _gate_apq(p, q, big):
    if p * p * q ** 3 > DESK_APQ and not big:
        raise UsageError(f"p^2 q^3 = {p * p * q ** 3} exceeds desk scale ({DESK_APQ}); pass --big")


def _gate_taft(l, n, big):
    if l ** (4 * n - 1) > DESK_TAFT and not big:
        raise UsageError(f"quotient dimension {l ** (4 * n - 1)} exceeds desk scale "
                         f"({DESK_TAFT}); pass --big")


# -- build / double / quotient ---------------------------------------------------

def cmd_build(args):
    if args.what == "taft":
        _gate_taft(args.l, args.n, args.big)
        H, _ = taft(args.l, args.n)
    elif args.what == "al":
        H, _, _ = build_script_A_l(args.p, args.q, args.t, args.l)
    else:
        with open(args.spec) as fh:
            data = matched_pair_from_json(json.load(fh))
        H = abelian_extension(data)
    persist.save_file(args.output, persist.hopf_file(H))
    _emit(args, {"output": args.output, "dim": H.dim, "name": H.name,
                 "sha256": H.content_hash()},
          [f"built {H.name} (dim {H.dim}) -> {args.output}", f"sha256 {H.content_hash()}"])
    return 0


def cmd_double(args):
    f = persist.load_file(args.input)
    if f["kind"] != "hopf":
        raise UsageError("double expects a Hopf algebra file")
    H = f["H"]
    D, R, _, _ = drinfeld_double(H)
    persist.save_file(args.output, persist.double_file(H, R, D))
    _emit(args, {"output": args.output, "dim": D.dim},
          [f"double of {H.name}: dim {D.dim}, {len(R)} R-matrix terms -> {args.output}"])
    return 0


def cmd_quotient(args):
    f = persist.load_file(args.input)
    if f["kind"] == "hopf":
        H = f["H"]
        D, _, _, _ = drinfeld_double(H)
    elif f["kind"] == "double":
        H, D = f["H"], f["D"]
    else:
        raise UsageError("quotient expects a Hopf algebra or a double")
    chi, x, order = persist.named_z(H)
    if args.order != order:
        log.warning("--order %d differs from the order %s recorded by the builder",
                    args.order, order)
    Q, _, rep = persist.quotient_of(H, D, n=args.order)
    if rep.ok:
        persist.save_file(args.output, persist.quotient_file(H, Q))
    lines = _report_lines(rep) + [f"quotient dim {Q.dim} (double {D.dim}, order {args.order})"]
    if rep.ok:
        lines.append(f"-> {args.output}")
    _emit(args, {"ok": rep.ok, "dim": Q.dim, "report": rep.to_json()}, lines)
    return 0 if rep.ok else 1


# -- check ---------------------------------------------------------------------

def _ribbon_report(f) -> Report:
    H = f["H"]
    D = f.get("D")
    if D is None:
        raise UsageError("ribbon needs a double or a quotient file")
    Qd = QuasiData(D, f["R"] if f["kind"] == "double" else D.R())
    if getattr(H, "taft_params", None):
        cands_a = [v for _, v in taft_grouplikes(H)]
        cands_b = [phi for _, phi in taft_characters(H)]
    else:
        one = H.one
        cands_a = [{i: one} for i in range(H.dim) if is_group_like(H, {i: one})]
        cands_b = []
    small = D.dim <= SAMPLE_ABOVE
    w = ribbon_search(Qd, cands_a, cands_b, check_delta=small,
                      hs=None if small else D.generators()) if cands_b else None
    if f["kind"] == "double":
        if w is None:
            rep = Report("ribbon element (double)")
            rep.fail("Kauffman-Radford witness exists", None)
            return rep
        return w.report
    Q = f["Q"]
    QQ = QuasiData(Q, f["R"])
    qgens = [Q.pi(g) for g in D.generators()]
    if w is not None:
        ubar, _ = drinfeld_u(QQ)
        return check_ribbon_element(QQ, Q.pi(w.v), ubar, hs=qgens,
                                    check_delta=Q.dim <= SAMPLE_ABOVE)
    from .reptheory.modular import ribbon_from_drinfeld
    wq = ribbon_from_drinfeld(QQ, hs=qgens)
    if wq is None:
        rep = Report("ribbon element (quotient)")
        rep.fail("v = u is a ribbon element", None)
        return rep
    return wq.report


def cmd_check(args):
    f = persist.load_file(args.input)
    A = f["alg"]
    what = args.property
    if what == "hopf":
        if A.dim <= SAMPLE_ABOVE:
            rep = check_hopf(A)
        else:
            rep = check_hopf(A, sample=args.sample, seed=args.seed)
    elif what == "star":
        try:
            rep = check_star(A)
        except StarAbsent as exc:
            _emit(args, {"ok": False, "star": "absent"}, [f"star absent: {exc}"])
            return 1
    elif what == "quasi":
        if f["R"] is None:
            raise UsageError("no R-matrix in this file (build the double first)")
        rep = check_quasi(QuasiData(A, f["R"]))
    elif what == "factorizable":
        if f["R"] is None:
            raise UsageError("no R-matrix in this file (build the double first)")
        rf, rg, method = factorizability_rank(QuasiData(A, f["R"]))
        rep = Report(f"factorizability ({A.name})")
        rep.checked.update({"rank f": rf, "rank g": rg, "dim": A.dim, "method": method})
        if not rf == rg == A.dim:
            rep.fail("rank f_{R21 R} = dim", (rf, rg, A.dim))
    else:
        rep = _ribbon_report(f)
    _emit(args, {"ok": rep.ok, "report": rep.to_json()}, _report_lines(rep))
    return 0 if rep.ok else 1


# -- pipeline --------------------------------------------------------------------

def cmd_pipeline(args):
    if args.family == "taft":
        _gate_taft(args.l, args.n, args.big)
        cert, _ = pipeline_taft(args.l, args.n, seed=args.seed, sample=args.sample,
                                ribbon=None if args.ribbon is None else args.ribbon == "yes")
    else:
        _gate_apq(args.p, args.q, args.big)
        cert, _ = pipeline_apq(args.p, args.q, args.t, seed=args.seed, sample=args.sample,
                               ribbon=args.ribbon != "no")
    d = cert["dims"]
    rib = cert["ribbon"]
    lines = [
        f"{cert['kind']} {cert['params']} seed {cert['seed']}",
        f"dims H/D/quotient: {d['H']}/{d['D']}/{d['quotient']}",
        f"z = chi x: group-like {cert['z']['group_like']}, central {cert['z']['central']}, "
        f"order {cert['z']['order']}",
        f"star: {cert['star']}",
        f"factorizable: {str(cert['factorizable']).lower()} "
        f"(rank {cert['rank']['f']}, {cert['rank']['method']})",
        f"ribbon: {rib if isinstance(rib, str) else rib['status']}",
    ]
    if "semisimple" in cert:
        lines.append(f"semisimple: {str(cert['semisimple']).lower()}")
    for name, c in cert["checks"].items():
        lines.append(f"  [{'ok' if c['ok'] else 'FAIL'}] {name}")
    lines.append(f"certificate {cert['certificate_sha256']}")
    _emit(args, cert, lines)
    return 0 if cert["ok"] else 1


# -- fusion / modular -------------------------------------------------------------

def _apq_params(path):
    """(p, q, t) from a pipeline certificate, a fusion table or an A_l-based file."""
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    for src in (obj.get("params"), obj.get("meta"), obj):
        if isinstance(src, dict) and all(k in src for k in ("p", "q", "t")):
            return src["p"], src["q"], src["t"], obj
    base = obj.get("base") or obj.get("hopf") or {}
    meta = base.get("meta", {})
    if meta.get("kind") == "script_A_l" and meta.get("l") == 0:
        return meta["p"], meta["q"], meta["t"], obj
    raise UsageError(f"{path} does not describe an A_(p,q) algebra (need p, q, t)")


def _apq_context(args):
    from .reptheory import build_apq, build_simples_apq, install_integral, primitive_root
    p, q, t, obj = _apq_params(args.alg)
    _gate_apq(p, q, args.big)
    ctx = build_apq(p, q, t)
    if not ctx.ideal_report.ok:
        raise HopfError("ideal generated by chi x is not a Hopf ideal")
    stored = obj.get("input_sha256")
    if stored is not None and stored != ctx.H.content_hash():
        raise UsageError("certificate input hash differs from the rebuilt A_0")
    install_integral(ctx)
    beta = args.beta if args.beta is not None else primitive_root(p)
    simples = build_simples_apq(ctx, beta)
    return ctx, simples, beta


def cmd_fusion_closed(args):
    from .reptheory import check_fusion_ring, fusion_closed_form
    ring = fusion_closed_form(args.p, args.q, args.t, args.beta)
    rep = check_fusion_ring(ring)
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(ring.to_json(), fh, sort_keys=True)
    lines = [f"closed-form fusion ring K({args.p},{args.q}) rank {ring.rank}"] + _report_lines(rep)
    if args.figures:
        from .plotting import plot_fusion
        lines += [f"figure {p}" for p in plot_fusion(ring, args.figures)]
    _emit(args, {"ok": rep.ok, "rank": ring.rank, "report": rep.to_json()}, lines)
    return 0 if rep.ok else 1


def cmd_fusion_verify(args):
    from .reptheory import (check_fusion_ring, directed_pairs, fusion_closed_form,
                            fusion_from_reps, verify_fusion)
    from .reptheory.fusion import sample_pairs
    ctx, simples, beta = _apq_context(args)
    closed = fusion_closed_form(ctx.p, ctx.q, ctx.t, beta)
    pairs = sample_pairs(closed.rank, args.samples, args.seed)
    directed = directed_pairs(closed)
    todo = list(dict.fromkeys(pairs + list(directed.values())))
    computed = fusion_from_reps(closed.labels, simples, todo, method=args.method,
                                gens=ctx.generators)
    rep = verify_fusion(closed, computed)
    inv = check_fusion_ring(computed)
    rep.merge(inv)
    lines = [f"A_({ctx.p},{ctx.q}) t={ctx.t} beta={beta}: {len(simples)} simples",
             f"{len(pairs)} sampled pairs (seed {args.seed}) + {len(directed)} directed rule cases",
             f"mismatches: {sum(1 for w, _ in rep.failures if w.startswith('N_ab'))}"]
    lines += _report_lines(rep)
    if args.figures:
        from .plotting import plot_fusion
        lines += [f"figure {p}" for p in plot_fusion(closed, args.figures)]
    payload = {"ok": rep.ok, "seed": args.seed, "pairs": todo,
               "directed": {k: list(v) for k, v in directed.items()},
               "report": rep.to_json(), "computed": computed.to_json()}
    _emit(args, payload, lines)
    return 0 if rep.ok else 1


def cmd_modular(args):
    from .reptheory import fusion_closed_form, fusion_from_reps, verify_fusion
    from .reptheory.modular import check_modular, modular_data, ribbon_from_drinfeld, sample_triples
    ctx, simples, beta = _apq_context(args)
    QQ = ctx.quasi()
    w = ribbon_from_drinfeld(QQ, hs=ctx.generators)
    if w is None:
        _emit(args, {"ok": False, "ribbon": "absent"}, ["no ribbon element of the form u l^-1"])
        return 1
    closed = fusion_closed_form(ctx.p, ctx.q, ctx.t, beta)
    triples = sample_triples(closed, args.samples, args.seed)
    pairs = list(dict.fromkeys((a, b) for a, b, _ in triples))
    computed = fusion_from_reps(closed.labels, simples, pairs, method=args.method,
                                gens=ctx.generators)
    rows = {x for tr in triples for x in tr} | {closed.unit}
    md = modular_data(QQ, simples, w, rows=rows)
    rep = check_modular(md, computed, triples, closed.unit)
    rep.merge(verify_fusion(closed, computed))
    rep.merge(w.report)
    lines = [f"A_({ctx.p},{ctx.q}) modular data: {len(md.theta)} twists, "
             f"{len(rows)} S~ rows, D^2 = {md.D2}",
             f"{len(triples)} Verlinde triples (seed {args.seed})"] + _report_lines(rep)
    if args.figures:
        from .plotting import plot_modular
        lines += [f"figure {p}" for p in plot_modular(md, args.figures)]
    _emit(args, {"ok": rep.ok, "seed": args.seed, "triples": triples,
                 "modular": md.to_json(), "report": rep.to_json()}, lines)
    return 0 if rep.ok else 1


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="forge", description="Exact Hopf algebra constructions "
                                 "and verifications.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, *, seeded=False, big=False):
        p.add_argument("--json", metavar="PATH", help="also write the report as JSON")
        if seeded:
            p.add_argument("--seed", type=int, default=1)
        if big:
            p.add_argument("--big", action="store_true",
                           help="allow parameters beyond desk scale")

    b = sub.add_parser("build", help="named constructors")
    bsub = b.add_subparsers(dest="what", required=True)
    bt = bsub.add_parser("taft")
    bt.add_argument("--l", type=int, required=True)
    bt.add_argument("--n", type=int, required=True)
    be = bsub.add_parser("ext")
    be.add_argument("--spec", required=True, help="matched-pair JSON")
    ba = bsub.add_parser("al")
    for k in ("p", "q", "t", "l"):
        ba.add_argument(f"--{k}", type=int, required=True)
    for p in (bt, be, ba):
        p.add_argument("-o", "--output", required=True)
        common(p, big=True)
    b.set_defaults(func=cmd_build)

    d = sub.add_parser("double", help="Drinfeld double of a Hopf algebra file")
    d.add_argument("input")
    d.add_argument("-o", "--output", required=True)
    common(d)
    d.set_defaults(func=cmd_double)

    c = sub.add_parser("check", help="verify a property of a stored structure")
    c.add_argument("property", choices=["hopf", "star", "quasi", "factorizable", "ribbon"])
    c.add_argument("input")
    c.add_argument("--sample", type=int, default=200,
                   help=f"sampled axiom instances above dimension {SAMPLE_ABOVE}")
    common(c, seeded=True)
    c.set_defaults(func=cmd_check)

    q = sub.add_parser("quotient", help="quotient of the double by the ideal of chi x")
    q.add_argument("input")
    q.add_argument("--order", type=int, required=True)
    q.add_argument("-o", "--output", required=True)
    common(q)
    q.set_defaults(func=cmd_quotient)

    pl = sub.add_parser("pipeline", help="end-to-end run emitting a certificate")
    psub = pl.add_subparsers(dest="family", required=True)
    pt = psub.add_parser("taft")
    pt.add_argument("--l", type=int, required=True)
    pt.add_argument("--n", type=int, required=True)
    pa = psub.add_parser("apq")
    for k in ("p", "q", "t"):
        pa.add_argument(f"--{k}", type=int, required=True)
    for p in (pt, pa):
        p.add_argument("--sample", type=int, default=200)
        p.add_argument("--ribbon", choices=["yes", "no"], default=None)
        common(p, seeded=True, big=True)
    pl.set_defaults(func=cmd_pipeline)

    fu = sub.add_parser("fusion", help="fusion rules of A_(p,q)")
    fsub = fu.add_subparsers(dest="mode", required=True)
    fc = fsub.add_parser("closed")
    for k in ("p", "q", "t"):
        fc.add_argument(f"--{k}", type=int, required=True)
    fc.add_argument("--beta", type=int, default=None)
    fc.add_argument("-o", "--output")
    fc.add_argument("--figures", metavar="DIR")
    common(fc)
    fc.set_defaults(func=cmd_fusion_closed)
    fv = fsub.add_parser("verify")
    mo = sub.add_parser("modular", help="S~, twists and Verlinde check for A_(p,q)")
    for p in (fv, mo):
        p.add_argument("--alg", required=True, help="certificate or file naming p, q, t")
        p.add_argument("--samples", type=int, required=True)
        p.add_argument("--beta", type=int, default=None)
        p.add_argument("--method", choices=["both", "intertwiner", "integral"], default="both")
        p.add_argument("--figures", metavar="DIR")
        common(p, seeded=True, big=True)
    fv.set_defaults(func=cmd_fusion_verify)
    mo.set_defaults(func=cmd_modular)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"forge: error: {exc}", file=sys.stderr)
        return 2
    except (persist.IntegrityError, RepError) as exc:
        print(f"forge: verification failed: {exc}", file=sys.stderr)
        return 1
    except (GroupError, HopfError, ValueError, OSError, KeyError) as exc:
        print(f"forge: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
