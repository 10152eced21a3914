"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are stored as integer coefficient tuples over the power basis
1, z, ..., z^(phi(N)-1) reduced modulo the N-th cyclotomic polynomial,
together with a positive common denominator.  Representations are
canonical, so equality and hashing are structural.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

__all__ = [
    "Cyc",
    "CyclotomicField",
    "ConductorMismatch",
    "field",
    "root_of_unity",
    "order_of",
    "promote",
    "ModularSpecialization",
]


class ConductorMismatch(ValueError):
    pass


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_divmod(num, den):
    """Exact division of integer polynomials with monic divisor (lists, low degree first)."""
    num = list(num)
    dd = len(den) - 1
    if len(num) <= dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for i, di in enumerate(den):
                num[k - dd + i] -= c * di
    return quot, num[:dd]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Integer coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


class CyclotomicField:
    """Static data for Q(zeta_N): modulus, reduction table, powers of zeta."""

    def __init__(self, N: int):
        if N < 1:
            raise ValueError("conductor must be positive")
        self.N = N
        self.modulus = cyclotomic_polynomial(N)
        self.phi = len(self.modulus) - 1
        phi = self.phi
        self._red = {}
        self._extend_red(max(2 * phi - 2, N))
        self._powers = None

    def _extend_red(self, upto):
        phi = self.phi
        k = phi + len(self._red)
        cur = list(self._red[k - 1]) if self._red else [-c for c in self.modulus[:phi]]
        if not self._red:
            self._red[phi] = tuple(cur)
            k = phi + 1
        while k <= upto:
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [ci - top * mi for ci, mi in zip(cur, self.modulus[:phi])]
            self._red[k] = tuple(cur)
            k += 1

    def reduce(self, coeffs):
        phi = self.phi
        if len(coeffs) - 1 > phi + len(self._red) - 1:
            self._extend_red(len(coeffs) - 1)
        out = list(coeffs[:phi]) + [0] * max(0, phi - len(coeffs))
        for k in range(phi, len(coeffs)):
            c = coeffs[k]
            if c:
                for i, r in enumerate(self._red[k]):
                    if r:
                        out[i] += c * r
        return out

    def power(self, k: int) -> "Cyc":
        """zeta_N ** k."""
        if self._powers is None:
            pw = []
            for j in range(self.N):
                v = [0] * max(self.phi, j + 1)
                v[j] = 1
                pw.append(Cyc._make(self.N, tuple(self.reduce(v)), 1))
            self._powers = pw
        return self._powers[k % self.N]

    def __repr__(self):
        return f"CyclotomicField({self.N})"


_FIELDS: dict[int, CyclotomicField] = {}


def field(N: int) -> CyclotomicField:
    f = _FIELDS.get(N)
    if f is None:
        f = _FIELDS[N] = CyclotomicField(N)
    return f


_MUL_CACHE: dict = {}
_MUL_CACHE_LIMIT = 2_000_000


class Cyc:
    """An element of Q(zeta_N).

    ``Cyc(N, 3)`` is the rational 3; ``Cyc.zeta(N, k)`` is zeta_N^k.  Values are
    immutable; arithmetic with ints and Fractions coerces automatically.
    """

    __slots__ = ("N", "c", "d", "_h")

    def __init__(self, N: int, value=0):
        fld = field(N)
        if isinstance(value, Cyc):
            if value.N != N:
                value = promote(value, N)
            c, d = value.c, value.d
        else:
            q = Fraction(value)
            c = (q.numerator,) + (0,) * (fld.phi - 1)
            d = q.denominator
        self.N = N
        self.c = c
        self.d = d
        self._h = hash((N, c, d))

    @classmethod
    def _make(cls, N, c, d):
        obj = object.__new__(cls)
        obj.N = N
        obj.c = c
        obj.d = d
        obj._h = hash((N, c, d))
        return obj

    @classmethod
    def _normal(cls, N, coeffs, d):
        if d < 0:
            coeffs = [-x for x in coeffs]
            d = -d
        if d != 1:
            g = d
            for x in coeffs:
                if x:
                    g = gcd(g, x)
                    if g == 1:
                        break
            if not any(coeffs):
                d = 1
            elif g != 1:
                coeffs = [x // g for x in coeffs]
                d //= g
        return cls._make(N, tuple(coeffs), d)

    @classmethod
    def from_coeffs(cls, N: int, coeffs) -> "Cyc":
        """Build from rational coefficients on the power basis; reduced mod Phi_N."""
        fr = [Fraction(x) for x in coeffs]
        den = 1
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in fr]
        return cls._normal(N, field(N).reduce(ints), den)

    @classmethod
    def zeta(cls, N: int, k: int = 1) -> "Cyc":
        return field(N).power(k)

    @classmethod
    def zero(cls, N):
        return cls._make(N, (0,) * field(N).phi, 1)

    @classmethod
    def one(cls, N):
        return cls._make(N, (1,) + (0,) * (field(N).phi - 1), 1)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self):
        return any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.c[0], self.d)

    @property
    def coeffs(self):
        return [Fraction(x, self.d) for x in self.c]

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.N != self.N:
                raise ConductorMismatch(f"conductors {self.N} and {other.N} differ; promote first")
            return other
        if isinstance(other, (int, Rational)):
            return Cyc(self.N, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.d == o.d:
            return Cyc._normal(self.N, [x + y for x, y in zip(self.c, o.c)], self.d)
        return Cyc._normal(self.N, [x * o.d + y * self.d for x, y in zip(self.c, o.c)], self.d * o.d)

    __radd__ = __add__

    def __neg__(self):
        return Cyc._make(self.N, tuple(-x for x in self.c), self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        key = (self, o)
        r = _MUL_CACHE.get(key)
        if r is not None:
            return r
        if len(_MUL_CACHE) > _MUL_CACHE_LIMIT:
            _MUL_CACHE.clear()
        fld = field(self.N)
        if o.is_rational():
            r = Cyc._normal(self.N, [x * o.c[0] for x in self.c], self.d * o.d)
        elif self.is_rational():
            r = Cyc._normal(self.N, [x * self.c[0] for x in o.c], self.d * o.d)
        else:
            r = Cyc._normal(self.N, fld.reduce(_poly_mul(self.c, o.c)), self.d * o.d)
        _MUL_CACHE[key] = r
        return r

    __rmul__ = __mul__

    def inv(self) -> "Cyc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_N)")
        r = _inv_cached(self)
        return r

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        return Cyc(self.N, other) * self.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        result = Cyc.one(self.N)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "Cyc":
        """Complex conjugation, zeta -> zeta^-1."""
        return _conj_cached(self)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Cyc):
            return self.N == other.N and self.d == other.d and self.c == other.c
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self.c[0], self.d) == other
        return NotImplemented

    def __hash__(self):
        return self._h

    # -- rendering --------------------------------------------------------
    def to_complex(self) -> complex:
        """Floating approximation, for rendering only."""
        z = cmath.exp(2j * cmath.pi / self.N)
        return sum(x * z ** i for i, x in enumerate(self.c)) / self.d

    def __repr__(self):
        terms = []
        for i, x in enumerate(self.c):
            if not x:
                continue
            coef = Fraction(x, self.d)
            if i == 0:
                terms.append(str(coef))
            else:
                mono = "z" if i == 1 else f"z^{i}"
                if coef == 1:
                    terms.append(mono)
                elif coef == -1:
                    terms.append("-" + mono)
                else:
                    terms.append(f"{coef}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"Cyc[{self.N}]({body})"

    def to_json(self):
        return {"N": self.N, "coeffs": [[x, self.d] for x in self.c]}

    @classmethod
    def from_json(cls, obj) -> "Cyc":
        return cls.from_coeffs(obj["N"], [Fraction(n, d) for n, d in obj["coeffs"]])


@lru_cache(maxsize=100_000)
def _inv_cached(a: Cyc) -> Cyc:
    fld = field(a.N)
    if a.is_rational():
        return Cyc._normal(a.N, [a.d] + [0] * (fld.phi - 1), a.c[0])
    # extended Euclid in Q[x] against Phi_N
    r0 = [Fraction(x) for x in fld.modulus]
    r1 = [Fraction(x, a.d) for x in a.c]
    s0, s1 = [Fraction(0)], [Fraction(1)]

    def trim(p):
        while len(p) > 1 and p[-1] == 0:
            p = p[:-1]
        return p

    r1 = trim(r1)
    while not (len(r1) == 1 and r1[0] == 0):
        # polynomial division r0 / r1
        num = list(r0)
        q = [Fraction(0)] * max(1, len(num) - len(r1) + 1)
        while len(num) >= len(r1) and any(num):
            num = trim(num)
            if len(num) < len(r1):
                break
            c = num[-1] / r1[-1]
            shift = len(num) - len(r1)
            q[shift] = c
            for i, v in enumerate(r1):
                num[shift + i] -= c * v
            num = num[:-1] if len(num) > 1 else [Fraction(0)]
        rem = trim(num) if num else [Fraction(0)]
        qs = _fpoly_mul(q, s1)
        s2 = [x - y for x, y in _zip_pad(s0, qs)]
        r0, r1 = r1, rem
        s0, s1 = s1, trim(s2)
    # r0 is a nonzero constant gcd
    c = r0[0]
    inv_coeffs = [x / c for x in s0]
    res = Cyc.from_coeffs(a.N, inv_coeffs)
    if res * a != Cyc.one(a.N):
        raise ArithmeticError("inverse verification failed")
    return res


def _fpoly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return zip(a, b)


@lru_cache(maxsize=100_000)
def _conj_cached(a: Cyc) -> Cyc:
    fld = field(a.N)
    acc = [0] * fld.phi
    for i, x in enumerate(a.c):
        if x:
            for j, r in enumerate(fld.power(-i).c):
                if r:
                    acc[j] += x * r
    return Cyc._normal(a.N, acc, a.d)


def root_of_unity(N: int, k: int = 1) -> Cyc:
    return Cyc.zeta(N, k)


def order_of(a: Cyc):
    """Multiplicative order of ``a`` if it is a root of unity, else None."""
    if a.is_zero():
        return None
    L = a.N if a.N % 2 == 0 else 2 * a.N
    one = Cyc.one(a.N)
    p = a
    for k in range(1, L + 1):
        if p == one:
            return k
        p = p * a
    return None


def promote(a: Cyc, M: int) -> Cyc:
    """Embed Q(zeta_N) into Q(zeta_M) for N | M via zeta_N -> zeta_M^(M/N)."""
    if M % a.N:
        raise ConductorMismatch(f"cannot promote conductor {a.N} to {M}")
    step = M // a.N
    acc = Cyc.zero(M)
    for i, x in enumerate(a.c):
        if x:
            acc = acc + Cyc.zeta(M, i * step) * x
    return acc * Fraction(1, a.d)


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class ModularSpecialization:
    """Ring map Z[zeta_N][1/d] -> F_P sending zeta_N to a primitive N-th root mod P.

    P is a prime with P = 1 mod N.  Used for fast rank lower bounds.
    """

    def __init__(self, N: int, start: int = 1 << 30, skip: int = 0):
        P = start - (start % N) + 1
        found = 0
        while True:
            if P > start and _is_prime(P):
                if found == skip:
                    break
                found += 1
            P += N
        self.N = N
        self.P = P
        # primitive N-th root: g^((P-1)/N) for generator-ish g, check order exactly
        for g in range(2, P):
            r = pow(g, (P - 1) // N, P)
            if all(pow(r, N // pr, P) != 1 for pr in _prime_factors(N)):
                break
        self.root = r if N > 1 else 1
        self._cache: dict = {}

    def __call__(self, a: Cyc) -> int:
        v = self._cache.get(a)
        if v is None:
            if a.N != self.N:
                raise ConductorMismatch("specialization conductor mismatch")
            P = self.P
            acc = 0
            rp = 1
            for x in a.c:
                if x:
                    acc += x * rp
                rp = rp * self.root % P
            v = acc * pow(a.d, -1, P) % P
            self._cache[a] = v
        return v


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
