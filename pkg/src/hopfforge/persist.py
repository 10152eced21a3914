"""JSON files for algebras, doubles and quotients.

Every file is an object with a ``structure`` key:

* ``hopf``: {"hopf": HopfData JSON}
* ``double``: {"base": HopfData JSON of H, "R": [[i, j, scalar], ...]}
* ``quotient``: {"base": ..., "provenance": {...}} (the ideal is recomputed
  from z and n, and the complement must match the stored one)

Doubles and quotients may also carry a materialized "hopf" table when small.
Named builds (Taft, A_l) are rebuilt from their parameters on load and must
hash to the stored tables.
"""
from __future__ import annotations

import json

from .constructors import build_script_A_l, decode_vector, taft
from .double import DrinfeldDouble
from .hopf import HopfData, HopfError, encode_scalar
from .quotient import QuotientHopf, central_hopf_ideal, quotient_hopf, verify_hopf_ideal
from .scalars import Cyc

__all__ = [
    "load_file",
    "save_file",
    "hopf_file",
    "double_file",
    "quotient_file",
    "base_algebra",
    "encode_tensor",
    "decode_tensor",
    "named_z",
    "quotient_of",
    "MATERIALIZE_LIMIT",
    "IntegrityError",
]

MATERIALIZE_LIMIT = 400


class IntegrityError(HopfError):
    """A stored structure disagrees with what it claims to be."""


def encode_tensor(T: dict) -> list:
    return [[i, j, encode_scalar(c)] for (i, j), c in sorted(T.items())]


def decode_tensor(obj) -> dict:
    return {(int(i), int(j)): Cyc.from_json(c) for i, j, c in obj}


def save_file(path: str, obj: dict):
    with open(path, "w") as fh:
        json.dump(obj, fh, sort_keys=True)


def hopf_file(H) -> dict:
    data = H if isinstance(H, HopfData) else H.materialize()
    return {"structure": "hopf", "hopf": data.to_json()}


def double_file(H: HopfData, R: dict, D=None) -> dict:
    out = {"structure": "double", "base": H.to_json(), "R": encode_tensor(R)}
    if D is not None and D.dim <= MATERIALIZE_LIMIT:
        out["hopf"] = D.materialize().to_json()
    return out


def quotient_file(H: HopfData, Q: QuotientHopf) -> dict:
    prov = Q.provenance()
    prov["parent_base_sha256"] = H.content_hash()
    out = {"structure": "quotient", "base": H.to_json(), "provenance": prov}
    if Q.dim <= MATERIALIZE_LIMIT:
        out["hopf"] = Q.materialize().to_json()
    return out


def base_algebra(obj: dict) -> HopfData:
    """HopfData from JSON, rebuilt from parameters for named builds."""
    stored = HopfData.from_json(obj)
    meta = stored.meta or {}
    kind = meta.get("kind")
    if kind == "taft":
        H, _ = taft(meta["l"], meta["n"], Cyc.from_json(meta["q"]), N=stored.N)
    elif kind == "script_A_l":
        H, _, _ = build_script_A_l(meta["p"], meta["q"], meta["t"], meta["l"], N=stored.N)
    else:
        return stored
    if H.content_hash() != stored.content_hash():
        raise IntegrityError(f"stored {kind} tables differ from a fresh build")
    return H


def named_z(H) -> tuple:
    """(chi, x, order) recorded by the named builders."""
    meta = H.meta or {}
    if "chi" not in meta or "x" not in meta:
        raise HopfError("input carries no chi / x provenance (only named builds do)")
    return decode_vector(meta["chi"]), decode_vector(meta["x"]), meta.get("order")


def load_file(path: str) -> dict:
    """{"kind": structure, "H": base, "alg": algebra, "R": R or None, ...}."""
    with open(path) as fh:
        obj = json.load(fh)
    st = obj.get("structure", "hopf" if "mult" in obj else None)
    if st == "hopf":
        H = base_algebra(obj.get("hopf", obj))
        return {"kind": "hopf", "H": H, "alg": H, "R": None}
    if st == "double":
        H = base_algebra(obj["base"])
        D = DrinfeldDouble(H)
        R = decode_tensor(obj["R"])
        if R != D.R():
            raise IntegrityError("stored R differs from the canonical R of the double")
        return {"kind": "double", "H": H, "D": D, "alg": D, "R": R}
    if st == "quotient":
        H = base_algebra(obj["base"])
        D = DrinfeldDouble(H)
        prov = obj["provenance"]
        z = {int(i): Cyc.from_json(c) for i, c in prov["z"]}
        n = prov["n"]
        comp = prov["complement"]
        I = central_hopf_ideal(D, z, n, gens=D.generators(),
                               prefer=comp if len(comp) * n == D.dim else None)
        Q = QuotientHopf(D, I)
        if Q.comp != comp:
            raise IntegrityError("recomputed complement differs from the stored one")
        rep = verify_hopf_ideal(Q)
        if not rep.ok:
            raise IntegrityError(f"stored ideal is not a Hopf ideal: {rep.failures[:3]}")
        return {"kind": "quotient", "H": H, "D": D, "Q": Q, "alg": Q, "R": Q.pi2(D.R()),
                "provenance": prov}
    raise HopfError(f"unrecognized file structure {st!r}")


def quotient_of(H, D, n=None, z=None):
    """Quotient of D(H) by z = chi x from provenance (or an explicit z)."""
    if z is None:
        chi, x, order = named_z(H)
        z = D.mul(D.embed_dual(chi), D.embed_H(x))
        n = n or order
    prefer = None
    meta = H.meta or {}
    if meta.get("kind") == "script_A_l":
        q = meta["q"]
        prefer = [a * H.dim + h * q for a in range(H.dim) for h in range(H.dim // q)]
    return quotient_hopf(D, z, n, D.R(), gens=D.generators(), prefer=prefer)

