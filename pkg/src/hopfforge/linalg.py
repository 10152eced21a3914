"""Sparse exact linear algebra over Q(zeta_N) plus a modular rank path.

Vectors are plain dicts ``{index: Cyc}`` with no zero entries.
"""
from __future__ import annotations

import numpy as np

from .scalars import Cyc, ModularSpecialization

__all__ = [
    "axpy",
    "scale",
    "Echelon",
    "nullspace",
    "rank_exact",
    "rank_mod_p",
    "solve_combination",
]


def axpy(target: dict, src: dict, c) -> dict:
    """target += c * src, in place; drops zeros."""
    for k, v in src.items():
        w = v * c
        old = target.get(k)
        if old is None:
            if w:
                target[k] = w
        else:
            s = old + w
            if s:
                target[k] = s
            else:
                del target[k]
    return target


def scale(vec: dict, c) -> dict:
    if not c:
        return {}
    return {k: v * c for k, v in vec.items()}


class Echelon:
    """Incremental row echelon form with leading entry = smallest column key.

    ``order`` maps a column to a sort key; by default columns sort by index.
    When ``track`` is true each stored row remembers the combination of input
    tags that produced it.
    """

    def __init__(self, order=None, track=False):
        self.rows: dict = {}  # pivot column -> row (pivot entry normalized to 1)
        self.combos: dict = {}
        self.order = order
        self.track = track
        self._reduced = True

    def _lead(self, vec):
        if self.order is None:
            return min(vec)
        return min(vec, key=self.order)

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    @property
    def pivots(self):
        return set(self.rows)

    def reduce(self, vec: dict, combo: dict | None = None):
        """Top-reduce a copy of vec; returns (remainder, combo)."""
        vec = dict(vec)
        combo = dict(combo) if combo is not None else None
        while vec:
            lead = self._lead(vec)
            row = self.rows.get(lead)
            if row is None:
                break
            c = -vec[lead]
            axpy(vec, row, c)
            if combo is not None:
                axpy(combo, self.combos[lead], c)
        return vec, combo

    def full_reduce(self, vec: dict):
        """Reduce every pivot column out of vec (requires rref())."""
        if not self._reduced:
            self.rref()
        vec = dict(vec)
        for col in [k for k in vec if k in self.rows]:
            c = vec.get(col)
            if c:
                axpy(vec, self.rows[col], -c)
        return vec

    def add(self, vec: dict, tag=None) -> bool:
        combo = {tag: Cyc.one(_conductor(vec))} if (self.track and vec) else None
        rem, combo = self.reduce(vec, combo)
        if not rem:
            return False
        lead = self._lead(rem)
        inv = rem[lead].inv()
        self.rows[lead] = scale(rem, inv)
        if self.track:
            self.combos[lead] = scale(combo, inv)
        self._reduced = False
        return True

    def contains(self, vec: dict) -> bool:
        rem, _ = self.reduce(vec)
        return not rem

    def rref(self):
        """Back-substitute so that every pivot column is a unit column."""
        key = self.order if self.order is not None else (lambda c: c)
        piv = sorted(self.rows, key=key, reverse=True)
        done = set()
        for p in piv:
            row = self.rows[p]
            hits = [c for c in row if c != p and c in done]
            if hits:
                row = dict(row)
                combo = dict(self.combos[p]) if self.track else None
                for c in hits:
                    coef = row.get(c)
                    if coef:
                        f = -coef
                        axpy(row, self.rows[c], f)
                        if combo is not None:
                            axpy(combo, self.combos[c], f)
                self.rows[p] = row
                if combo is not None:
                    self.combos[p] = combo
            done.add(p)
        self._reduced = True
        return self


def _conductor(vec):
    for v in vec.values():
        return v.N
    return 1


def rank_exact(vectors) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def nullspace(equations, unknowns, N: int) -> list:
    """Basis of {x : sum_j eq[j] x_j = 0 for every equation}.

    ``equations`` is an iterable of dicts over unknown indices; ``unknowns`` is
    the list of all unknown indices.
    """
    ech = Echelon()
    for eq in equations:
        if eq:
            ech.add(eq)
    ech.rref()
    one = Cyc.one(N)
    basis = []
    for f in unknowns:
        if f in ech.rows:
            continue
        sol = {f: one}
        for p, row in ech.rows.items():
            c = row.get(f)
            if c:
                sol[p] = -c
        basis.append(sol)
    return basis


def solve_combination(target: dict, vectors: list):
    """Coefficients c with sum c_i vectors[i] = target, or None."""
    ech = Echelon(track=True)
    for i, v in enumerate(vectors):
        ech.add(v, tag=i)
    rem, combo = ech.reduce(target, {})
    if rem:
        return None
    return {k: -v for k, v in combo.items()} if combo else {}


def rank_mod_p(entries, nrows: int, ncols: int, spec: ModularSpecialization) -> int:
    """Rank over F_P of a sparse matrix given as {(i, j): Cyc}.

    A lower bound on the rank over Q(zeta_N); equal to it for all but finitely
    many primes.
    """
    P = spec.P
    M = np.zeros((nrows, ncols), dtype=np.int64)
    for (i, j), v in entries.items():
        M[i, j] = (M[i, j] + spec(v)) % P
    return _dense_rank_mod(M, P)


def _dense_rank_mod(M: np.ndarray, P: int) -> int:
    M = M.copy()
    nrows, ncols = M.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), -1, P)
        M[r] = (M[r] * inv) % P
        below = np.nonzero(M[r + 1:, c])[0] + r + 1
        if below.size:
            f = M[below, c].reshape(-1, 1)
            # split to keep products under 2^63
            M[below] = (M[below] - (f * M[r]) % P) % P
        r += 1
    return r
