"""Finite-dimensional modules over structure-constant Hopf algebras.

Operators are sparse matrices stored as nested dicts ``{row: {col: Cyc}}``.
A ``Rep`` knows the operator of every basis element (computed lazily), its
character, and how to act by arbitrary algebra elements.
"""
from __future__ import annotations

from ..hopf import HopfAlgebra, HopfError, Report, left_integral
from ..linalg import Echelon, axpy, nullspace
from ..scalars import Cyc

__all__ = [
    "RepError",
    "Rep",
    "GeneratorPlan",
    "generator_plan",
    "rep_from_generators",
    "regular_rep",
    "tensor_rep",
    "dual_rep",
    "check_module",
    "check_unitary",
    "intertwiners",
    "end_dim",
    "normalized_integral",
    "multiplicity",
    "multiplicity_intertwiner",
    "multiplicity_integral",
    "mat_identity",
    "mat_mul",
    "mat_kron",
    "mat_adjoint",
    "mat_trace",
    "mat_from_dense",
    "mat_to_dense",
]


class RepError(HopfError):
    pass


# sparse matrices ------------------------------------------------------------

def mat_identity(n: int, N: int) -> dict:
    one = Cyc.one(N)
    return {i: {i: one} for i in range(n)}


def mat_mul(A: dict, B: dict) -> dict:
    out = {}
    for r, row in A.items():
        acc = {}
        for k, a in row.items():
            brow = B.get(k)
            if brow:
                axpy(acc, brow, a)
        if acc:
            out[r] = acc
    return out


def mat_axpy(T: dict, A: dict, c) -> dict:
    for r, row in A.items():
        acc = T.get(r)
        if acc is None:
            acc = T[r] = {}
        axpy(acc, row, c)
        if not acc:
            del T[r]
    return T


def mat_scale(A: dict, c) -> dict:
    if not c:
        return {}
    return {r: {k: v * c for k, v in row.items()} for r, row in A.items()}


def mat_kron(A: dict, B: dict, nb: int) -> dict:
    out = {}
    for r1, row1 in A.items():
        for r2, row2 in B.items():
            out[r1 * nb + r2] = {c1 * nb + c2: a * b for c1, a in row1.items() for c2, b in row2.items()}
    return out


def mat_transpose(A: dict) -> dict:
    out = {}
    for r, row in A.items():
        for c, v in row.items():
            out.setdefault(c, {})[r] = v
    return out


def mat_adjoint(A: dict) -> dict:
    out = {}
    for r, row in A.items():
        for c, v in row.items():
            out.setdefault(c, {})[r] = v.conj()
    return out


def mat_trace(A: dict, N: int) -> Cyc:
    acc = Cyc.zero(N)
    for r, row in A.items():
        v = row.get(r)
        if v:
            acc = acc + v
    return acc


def mat_from_dense(rows, N: int) -> dict:
    out = {}
    for r, row in enumerate(rows):
        d = {}
        for c, v in enumerate(row):
            v = v if isinstance(v, Cyc) else Cyc(N, v)
            if v:
                d[c] = v
        if d:
            out[r] = d
    return out


def mat_to_dense(A: dict, n: int, m: int | None = None, N: int = 1) -> list:
    m = n if m is None else m
    z = Cyc.zero(N)
    return [[A.get(r, {}).get(c, z) for c in range(m)] for r in range(n)]


# generator words --------------------------------------------------------------

class GeneratorPlan:
    """Expresses every basis element of ``alg`` through words in generators.

    Words are grown breadth first by left multiplication; ``words[w]`` is
    ``(gen, parent)`` meaning word_w = gen * word_parent (word 0 is the unit).
    ``basis_combos[i]`` gives b_i as a combination of words.
    """

    def __init__(self, alg: HopfAlgebra, gens: list):
        self.alg = alg
        self.gens = [dict(g) for g in gens]
        self.words = [(None, None)]
        vecs = [dict(alg.unit)]
        ech = Echelon(track=True)
        ech.add(vecs[0], tag=0)
        head = 0
        while head < len(vecs) and ech.rank < alg.dim:
            base = vecs[head]
            for gi, g in enumerate(self.gens):
                v = alg.mul(g, base)
                if v and ech.add(v, tag=len(vecs)):
                    self.words.append((gi, head))
                    vecs.append(v)
                    if ech.rank == alg.dim:
                        break
            head += 1
        self.reached = ech.rank
        if ech.rank < alg.dim:
            raise RepError(f"generators span only {ech.rank} of {alg.dim} dimensions")
        ech.rref()
        self.basis_combos = [ech.combos[i] for i in range(alg.dim)]

    def word_ops(self, gen_ops: list, dim: int, N: int) -> list:
        ops = [mat_identity(dim, N)]
        for gi, parent in self.words[1:]:
            ops.append(mat_mul(gen_ops[gi], ops[parent]))
        return ops


def generator_plan(alg: HopfAlgebra, gens: list) -> GeneratorPlan:
    cache = alg.__dict__.setdefault("_generator_plans", {})
    key = tuple(tuple(sorted(g.items())) for g in gens)
    plan = cache.get(key)
    if plan is None:
        plan = cache[key] = GeneratorPlan(alg, gens)
    return plan


# representations --------------------------------------------------------------

class Rep:
    """A module over ``alg`` of dimension ``dim``; subclasses supply op_basis."""

    def __init__(self, alg: HopfAlgebra, dim: int, *, label=None, unitary=False):
        self.alg = alg
        self.dim = dim
        self.N = alg.N
        self.label = label
        self.unitary = unitary
        self._ops = {}
        self._chars = {}

    def _op_basis(self, i: int) -> dict:
        raise NotImplementedError

    def op_basis(self, i: int) -> dict:
        op = self._ops.get(i)
        if op is None:
            op = self._ops[i] = self._op_basis(i)
        return op

    def act(self, vec: dict) -> dict:
        out = {}
        for i, c in vec.items():
            mat_axpy(out, self.op_basis(i), c)
        return out

    def act_cached(self, vec: dict) -> dict:
        """act() memoized on the identity of ``vec`` (for reused generators)."""
        cache = self.__dict__.setdefault("_act_cache", {})
        hit = cache.get(id(vec))
        if hit is None or hit[0] is not vec:
            hit = cache[id(vec)] = (vec, self.act(vec))
        return hit[1]

    def _character_basis(self, i: int) -> Cyc:
        return mat_trace(self.op_basis(i), self.N)

    def character_basis(self, i: int) -> Cyc:
        v = self._chars.get(i)
        if v is None:
            v = self._chars[i] = self._character_basis(i)
        return v

    def character(self, vec: dict) -> Cyc:
        acc = Cyc.zero(self.N)
        for i, c in vec.items():
            x = self.character_basis(i)
            if x:
                acc = acc + c * x
        return acc

    def __repr__(self):
        name = self.label if self.label is not None else type(self).__name__
        return f"Rep({name}, dim={self.dim})"


class GeneratedRep(Rep):
    """Module determined by operators on algebra generators."""

    def __init__(self, alg, dim, gens, gen_ops, plan, **kw):
        super().__init__(alg, dim, **kw)
        self.gens = gens
        self.gen_ops = gen_ops
        self.plan = plan
        self._words = None

    def _op_basis(self, i):
        if self._words is None:
            self._words = self.plan.word_ops(self.gen_ops, self.dim, self.N)
        out = {}
        for w, c in self.plan.basis_combos[i].items():
            mat_axpy(out, self._words[w], c)
        return out


def rep_from_generators(alg: HopfAlgebra, gens: list, *, dim=None, label=None, unitary=False,
                        check=True) -> GeneratedRep:
    """``gens`` is a list of (element, operator); operators are sparse or dense.

    Raises RepError if the elements do not generate ``alg`` or, with
    ``check``, if the resulting action violates a module axiom.
    """
    if not gens:
        raise RepError("no generators given")
    vecs = [dict(v) for v, _ in gens]
    ops = []
    for _, op in gens:
        if isinstance(op, list):
            d = len(op)
            op = mat_from_dense(op, alg.N)
        else:
            d = None
        ops.append(op)
        if d is not None:
            dim = d if dim is None else dim
    if dim is None:
        dim = 1 + max((max([r] + list(row)) for op in ops for r, row in op.items()), default=0)
    plan = generator_plan(alg, vecs)
    rep = GeneratedRep(alg, dim, vecs, ops, plan, label=label, unitary=unitary)
    if check:
        r = check_module(rep)
        if not r.ok:
            raise RepError(f"module axioms fail for {label}: {r.failures[0]}")
    return rep


class _MatrixRep(Rep):
    def __init__(self, alg, dim, ops, **kw):
        super().__init__(alg, dim, **kw)
        self._ops = dict(ops)


def regular_rep(alg: HopfAlgebra) -> Rep:
    """Left regular module: b_i acts by left multiplication."""
    ops = {}
    for i in range(alg.dim):
        m = {}
        for j in range(alg.dim):
            for k, c in alg.mul_basis(i, j).items():
                m.setdefault(k, {})[j] = c
        ops[i] = m
    return _MatrixRep(alg, alg.dim, ops, label="regular")


class TensorRep(Rep):
    def __init__(self, M: Rep, Nr: Rep):
        super().__init__(M.alg, M.dim * Nr.dim, label=(M.label, Nr.label),
                         unitary=M.unitary and Nr.unitary)
        self.factors = (M, Nr)

    def _op_basis(self, i):
        return self.act({i: self.alg.one})

    def act(self, vec):
        M, Nr = self.factors
        grouped = {}
        for (j, k), c in self.alg.comul(vec).items():
            axpy(grouped.setdefault(j, {}), {k: c}, 1)
        out = {}
        for j, right in grouped.items():
            if right:
                mat_axpy(out, mat_kron(M.op_basis(j), Nr.act(right), Nr.dim), 1)
        return out

    def _character_basis(self, i):
        M, Nr = self.factors
        acc = Cyc.zero(self.N)
        for (j, k), c in self.alg.comul_basis(i).items():
            a = M.character_basis(j)
            if a:
                b = Nr.character_basis(k)
                if b:
                    acc = acc + c * a * b
        return acc


class DualRep(Rep):
    def __init__(self, M: Rep):
        super().__init__(M.alg, M.dim, label=("dual", M.label), unitary=M.unitary)
        self.base = M

    def _op_basis(self, i):
        return mat_transpose(self.base.act(self.alg.antipode_basis(i)))

    def _character_basis(self, i):
        return self.base.character(self.alg.antipode_basis(i))


def tensor_rep(M: Rep, Nr: Rep) -> Rep:
    if M.alg is not Nr.alg:
        raise RepError("tensor product of modules over different algebras")
    return TensorRep(M, Nr)


def dual_rep(M: Rep) -> Rep:
    return DualRep(M)


# verification --------------------------------------------------------------

def _module_gens(rep: Rep):
    if isinstance(rep, GeneratedRep):
        return list(zip(rep.gens, rep.gen_ops))
    return [({i: rep.alg.one}, rep.op_basis(i)) for i in range(rep.alg.dim)]


def check_module(rep: Rep, *, exhaustive=False) -> Report:
    """rho(1) = id and rho(g b_j) = rho(g) rho(b_j) for generators g, all j.

    Since the generators span the algebra multiplicatively this is
    equivalent to the full check over all basis pairs, which ``exhaustive``
    runs literally.
    """
    A = rep.alg
    r = Report(f"module axioms ({rep.label})")
    if rep.act(A.unit) != mat_identity(rep.dim, rep.N):
        r.fail("unit acts as identity", None)
    if exhaustive:
        pairs = [({i: A.one}, rep.op_basis(i)) for i in range(A.dim)]
    else:
        pairs = _module_gens(rep)
    n = 0
    for gi, (g, gop) in enumerate(pairs):
        if rep.act(g) != gop:
            r.fail("generator operator matches its expansion", gi)
        for j in range(A.dim):
            lhs = mat_mul(gop, rep.op_basis(j))
            rhs = rep.act(A.mul(g, {j: A.one}))
            if lhs != rhs:
                r.fail("rho(g b) = rho(g) rho(b)", (gi, j))
            n += 1
    r.count("products", n)
    return r


def check_unitary(rep: Rep) -> Report:
    """rho(b*) is the conjugate transpose of rho(b) for every basis element."""
    A = rep.alg
    r = Report(f"unitarity ({rep.label})")
    for i in range(A.dim):
        if rep.act(A.star_basis(i)) != mat_adjoint(rep.op_basis(i)):
            r.fail("rho(h*) = rho(h)^dagger", i)
    r.count("basis elements", A.dim)
    return r


def _diagonal(op: dict, dim: int, N: int):
    diag = []
    z = Cyc.zero(N)
    for r in range(dim):
        row = op.get(r, {})
        if any(c != r for c in row):
            return None
        diag.append(row.get(r, z))
    return diag


def intertwiners(S: Rep, M: Rep, gens: list | None = None) -> list:
    """Basis of Hom_A(S, M) as dicts {(i, j): c} for X with X rho_S = rho_M X.

    ``gens`` are algebra elements generating A (default: those of S when it
    was built from generators, else the full basis).  Generators acting
    diagonally on both sides are used first to discard unknowns.
    """
    A = S.alg
    if gens is None:
        gens = [g for g, _ in _module_gens(S)]
    ds, dm = S.dim, M.dim
    live = {(i, j) for i in range(dm) for j in range(ds)}
    dense = []
    for g in gens:
        a, b = S.act_cached(g), M.act_cached(g)
        da, db = _diagonal(a, ds, S.N), _diagonal(b, dm, M.N)
        if da is not None and db is not None:
            live = {(i, j) for (i, j) in live if da[j] == db[i]}
        else:
            dense.append((a, b))
    unknowns = sorted(live)
    index = {u: n for n, u in enumerate(unknowns)}
    eqs = []
    for a, b in dense:
        # (X a)_{ij} - (b X)_{ij} = 0
        at = mat_transpose(a)
        for i in range(dm):
            for j in range(ds):
                eq = {}
                for k, c in at.get(j, {}).items():  # a[k][j]
                    u = index.get((i, k))
                    if u is not None:
                        axpy(eq, {u: c}, 1)
                for k, c in b.get(i, {}).items():  # b[i][k]
                    u = index.get((k, j))
                    if u is not None:
                        axpy(eq, {u: c}, -1)
                if eq:
                    eqs.append(eq)
    sols = nullspace(eqs, list(range(len(unknowns))), A.N)
    return [{unknowns[u]: c for u, c in s.items()} for s in sols]


def end_dim(M: Rep, gens=None) -> int:
    return len(intertwiners(M, M, gens))


def normalized_integral(alg: HopfAlgebra, left_factors=None) -> dict:
    """Two-sided integral with eps = 1 (cached); requires semisimplicity."""
    cached = alg.__dict__.get("_normalized_integral")
    if cached is not None:
        return cached
    lam = left_integral(alg, left_factors)
    e = alg.eps(lam)
    if not e:
        raise RepError("integral has eps = 0: the algebra is not semisimple")
    lam = {k: v / e for k, v in lam.items()}
    alg._normalized_integral = lam
    return lam


def set_normalized_integral(alg: HopfAlgebra, lam: dict, gens: list) -> dict:
    """Install a known integral after checking h lam = eps(h) lam = lam h on gens."""
    e = alg.eps(lam)
    if not e:
        raise RepError("integral has eps = 0")
    lam = {k: v / e for k, v in lam.items()}
    for g in gens:
        eg = alg.eps(g)
        target = {k: v * eg for k, v in lam.items()} if eg else {}
        if alg.mul(g, lam) != target or alg.mul(lam, g) != target:
            raise RepError("element is not a two-sided integral")
    alg._normalized_integral = lam
    return lam


def _psi(S: Rep) -> dict:
    """(id (x) chi_S o S) Delta(lam), cached on S."""
    psi = S.__dict__.get("_psi")
    if psi is None:
        A = S.alg
        lam = normalized_integral(A)
        psi = {}
        for (j, k), c in A.comul(lam).items():
            v = S.character(A.antipode_basis(k))
            if v:
                axpy(psi, {j: c * v}, 1)
        S._psi = psi
    return psi


def multiplicity_integral(S: Rep, M: Rep) -> int:
    """Trace of the normalized integral on M (x) dual(S)."""
    val = M.character(_psi(S))
    if not val.is_rational() or val.to_fraction().denominator != 1 or val.to_fraction() < 0:
        raise RepError(f"integral trace {val} is not a non-negative integer")
    return int(val.to_fraction())


def multiplicity_intertwiner(S: Rep, M: Rep, gens=None) -> int:
    return len(intertwiners(S, M, gens))


def multiplicity(S: Rep, M: Rep, *, gens=None, method="both") -> int:
    """Multiplicity of the simple module S in M.

    ``method`` is "intertwiner", "integral" or "both" (the default, which
    raises RepError if the two disagree).
    """
    if method == "intertwiner":
        return multiplicity_intertwiner(S, M, gens)
    if method == "integral":
        return multiplicity_integral(S, M)
    a = multiplicity_intertwiner(S, M, gens)
    b = multiplicity_integral(S, M)
    if a != b:
        raise RepError(f"multiplicity methods disagree for {S.label} in {M.label}: {a} vs {b}")
    return a
