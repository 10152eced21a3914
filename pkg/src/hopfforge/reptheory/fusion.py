"""Fusion rings: closed-form K(p, q) and tables computed from modules."""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from ..hopf import Report
from .apq import SimpleLabel, canonical_label, enumerate_labels, label_dim, primitive_root
from .reps import multiplicity, tensor_rep

__all__ = [
    "FusionRing",
    "FusionError",
    "closed_product",
    "fusion_closed_form",
    "fusion_from_reps",
    "verify_fusion",
    "check_fusion_ring",
    "check_associativity",
    "directed_pairs",
    "RULES",
]

RULES = ("1", "2", "3", "4", "5.1", "5.2", "6", "7", "8.1", "8.2", "8.3", "9", "10.1", "10.2")
_ORDER = {"T": 0, "U": 1, "V": 2, "W": 3}


class FusionError(ValueError):
    pass


@dataclass
class FusionRing:
    """Labels, structure constants N[(a, b)] = {c: N_ab^c}, dims and unit index."""

    labels: list
    N: dict
    dims: list
    unit: int
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.index = {lab: k for k, lab in enumerate(self.labels)}

    @property
    def rank(self):
        return len(self.labels)

    def product(self, a: int, b: int) -> dict:
        return self.N.get((a, b), {})

    def coefficient(self, a: int, b: int, c: int) -> int:
        return self.N.get((a, b), {}).get(c, 0)

    def to_json(self):
        return {
            "labels": [lab.to_json() for lab in self.labels],
            "dims": list(self.dims),
            "unit": self.unit,
            "N": [[a, b, c, n] for (a, b), row in sorted(self.N.items())
                  for c, n in sorted(row.items())],
            "meta": self.meta,
        }

    @classmethod
    def from_json(cls, obj):
        N = {}
        for a, b, c, n in obj["N"]:
            N.setdefault((a, b), {})[c] = n
        return cls([SimpleLabel.from_json(x) for x in obj["labels"]], N, list(obj["dims"]),
                   obj["unit"], obj.get("meta", {}))

    def __eq__(self, other):
        return (isinstance(other, FusionRing) and self.labels == other.labels
                and self.dims == other.dims and self.unit == other.unit and self.N == other.N)


def closed_product(la: SimpleLabel, lb: SimpleLabel, p: int, q: int, t: int, beta: int):
    """(Counter of canonical labels, rule tag) for la . lb."""
    if _ORDER[la.family] > _ORDER[lb.family]:
        la, lb = lb, la
    m = (p - 1) // q
    cosets = [pow(beta, r, p) for r in range(1, m + 1)]
    out = Counter()

    def add(fam, idx, k=1):
        out[canonical_label(fam, idx, p, q, t, beta)] += k

    tp = lambda e: pow(t, e % q, p)  # noqa: E731
    fa, fb = la.family, lb.family
    A, B = la.idx, lb.idx
    if fa == "T":
        i, j = A
        if fb == "T":
            add("T", (i + B[0], j + B[1]))
            return out, "1"
        if fb == "U":
            add("U", (i + B[0], B[1]))
            return out, "2"
        if fb == "V":
            k, l, s = B
            add("V", (k, i + l, tp(i) * s))
            return out, "3"
        k, l, s = B
        add("W", (i + k, i + l, j + s))
        return out, "4"
    if fa == "U":
        i2, j2 = A
        if fb == "U":
            i3, j3 = B
            rule = "5.1"
            for s in range(q):
                val = (j2 * tp(i3) + j3 * tp(s)) % p
                if val == 0:
                    rule = "5.2"
                    for s2 in range(q):
                        add("T", (i2 + i3, s2))
                else:
                    add("U", (i2 + i3, val))
            return out, rule
        if fb == "V":
            i3, j3, k2 = B
            for s in range(q):
                add("V", (i3, i2 + j3, tp(i2) * (k2 + j2 * tp(j3 + s))))
            return out, "6"
        i3, j3, _ = B
        for s in range(q):
            add("W", (i2 + i3, i2 + j3, s))
        return out, "7"
    if fa == "V":
        i2, j2, k1 = A
        if fb == "V":
            i3, j3, k2 = B
            rule = "8.1"
            for s in range(q):
                lead = (i2 + i3 * tp(s + j2)) % p
                K = (k1 * tp(j3) + k2 * pow(t, (-s) % q, p)) % p
                if lead:
                    add("V", (lead, j2 + j3, K))
                elif K == 0:
                    rule = "8.2"
                    for s2 in range(q):
                        add("T", (j2 + j3, s2))
                else:
                    rule = "8.3"
                    add("U", (j2 + j3, K))
            return out, rule
        i3, j3, _ = B
        for s in range(q):
            add("W", (j2 + i3, j2 + j3, s))
        return out, "9"
    i, j, k = A
    i1, j1, k1 = B
    if (i + i1 - j - j1) % q:
        for s in range(q):
            add("W", (i + i1, j + j1, s), m)
        add("W", (i + i1, j + j1, k + k1))
        return out, "10.1"
    add("T", (i + i1, k + k1))
    for b in cosets:
        add("U", (i + i1, b))
    for s in range(p):
        for b in cosets:
            add("V", (b, i + i1, s))
    return out, "10.2"


def fusion_closed_form(p: int, q: int, t: int, beta: int | None = None) -> FusionRing:
    beta = primitive_root(p) if beta is None else beta
    labels = enumerate_labels(p, q, t, beta)
    index = {lab: k for k, lab in enumerate(labels)}
    dims = [label_dim(lab, p, q) for lab in labels]
    N = {}
    rules = {}
    for a, la in enumerate(labels):
        for b, lb in enumerate(labels):
            prod, rule = closed_product(la, lb, p, q, t, beta)
            row = {}
            for lab, n in prod.items():
                if lab not in index:
                    raise FusionError(f"rule {rule} produced non-canonical label {lab}")
                row[index[lab]] = n
            N[(a, b)] = row
            rules[(a, b)] = rule
    ring = FusionRing(labels, N, dims, index[SimpleLabel("T", (0, 0))],
                      meta={"p": p, "q": q, "t": t, "beta": beta, "source": "closed form"})
    ring.rules = rules
    return ring


def check_fusion_ring(ring: FusionRing, *, pairs=None) -> Report:
    """Unit row, dimension homomorphism and commutativity on ``pairs`` (default all)."""
    rep = Report("fusion ring invariants")
    u = ring.unit
    known = ring.N.keys() if pairs is None else pairs
    for a, b in known:
        if (a, b) not in ring.N:
            continue
        row = ring.N[(a, b)]
        if any(n < 0 for n in row.values()):
            rep.fail("non-negative coefficients", (a, b))
        if sum(n * ring.dims[c] for c, n in row.items()) != ring.dims[a] * ring.dims[b]:
            rep.fail("sum_c N_ab^c dim c = dim a dim b", (a, b))
        rep.count("dimension homomorphism")
        if (b, a) in ring.N:
            if ring.N[(b, a)] != row:
                rep.fail("N_ab^c = N_ba^c", (a, b))
            rep.count("commutativity")
        if a == u and row != {b: 1}:
            rep.fail("unit row N_1a^b = delta", b)
        if a == u:
            rep.count("unit row")
    return rep


def _mul_vec(ring, vec: dict, b: int) -> dict:
    out = Counter()
    for a, n in vec.items():
        for c, k in ring.product(a, b).items():
            out[c] += n * k
    return {c: n for c, n in out.items() if n}


def check_associativity(ring: FusionRing, triples) -> Report:
    rep = Report("fusion ring associativity")
    for a, b, c in triples:
        lhs = _mul_vec(ring, ring.product(a, b), c)
        rhs = Counter()
        for d, n in ring.product(b, c).items():
            for e, k in ring.product(a, d).items():
                rhs[e] += n * k
        rhs = {e: n for e, n in rhs.items() if n}
        if lhs != rhs:
            rep.fail("(ab)c = a(bc)", (a, b, c))
        rep.count("triples")
    return rep


def directed_pairs(ring: FusionRing) -> dict:
    """One (a, b) pair per closed-form rule tag."""
    out = {}
    for key, rule in sorted(ring.rules.items()):
        out.setdefault(rule, key)
    return out


def fusion_from_reps(ring_labels, simples, pairs, *, method="both", gens=None) -> FusionRing:
    """N_ab^c = multiplicity(c, a (x) b) for the requested pairs."""
    labels = list(ring_labels)
    index = {lab: k for k, lab in enumerate(labels)}
    by_label = {S.label: S for S in simples}
    dims = [by_label[lab].dim for lab in labels]
    N = {}
    for a, b in pairs:
        M = tensor_rep(by_label[labels[a]], by_label[labels[b]])
        row = {}
        for c, lab in enumerate(labels):
            n = multiplicity(by_label[lab], M, gens=gens, method=method)
            if n:
                row[c] = n
        N[(a, b)] = row
    return FusionRing(labels, N, dims, index[SimpleLabel("T", (0, 0))],
                      meta={"source": "multiplicities", "method": method})


def verify_fusion(closed: FusionRing, computed: FusionRing) -> Report:
    """Every mismatch between the closed form and computed multiplicities."""
    rep = Report("closed-form fusion vs multiplicities")
    rules = getattr(closed, "rules", {})
    for (a, b), row in sorted(computed.N.items()):
        exp = closed.N.get((a, b))
        if exp != row:
            rep.fail(f"N_ab (rule {rules.get((a, b), '?')})",
                     (str(closed.labels[a]), str(closed.labels[b])))
        rep.count("pairs")
    return rep


def sample_pairs(n_labels: int, k: int, seed: int = 1) -> list:
    rng = random.Random(seed)
    return [(rng.randrange(n_labels), rng.randrange(n_labels)) for _ in range(k)]
