import cmath
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfforge.scalars import (ConductorMismatch, Cyc, ModularSpecialization, order_of, promote,
                               root_of_unity)

CONDUCTORS = [3, 5, 7, 12, 21]


def cyc(N):
    return st.lists(st.integers(-6, 6), min_size=N, max_size=N).map(
        lambda cs: sum((Cyc.zeta(N, k) * c for k, c in enumerate(cs)), Cyc.zero(N)))


@st.composite
def same_field(draw, n=2):
    N = draw(st.sampled_from(CONDUCTORS))
    return [draw(cyc(N)) for _ in range(n)]


def numeric(a):
    return a.to_complex()


def close(z, w):
    return abs(z - w) < 1e-8 * (1 + abs(w))


def reduce_mod_phi(coeffs, N):
    """Independent oracle: numpy polynomial remainder by the cyclotomic polynomial."""
    # Phi_N from its complex roots, rounded to integers
    roots = [cmath.exp(2j * cmath.pi * k / N) for k in range(1, N + 1) if np.gcd(k, N) == 1]
    phi = np.real_if_close(np.poly(roots)).round().astype(int)[::-1]
    _, r = np.polynomial.polynomial.polydiv(np.array(coeffs, dtype=float), phi.astype(float))
    return [int(round(x)) for x in r]


def test_zeta3_products():
    z = Cyc.zeta(3)
    assert z * z ** 2 == Cyc.one(3)
    assert z + z ** 2 == Cyc(3, -1)


def test_square_in_q_zeta5_matches_polynomial_oracle():
    a = Cyc.zeta(5) + 1
    want = reduce_mod_phi(np.polynomial.polynomial.polymul([1, 1], [1, 1]), 5)
    want += [0] * (4 - len(want))
    assert [int(c) for c in (a * a).coeffs] == want
    assert a * a == 1 + 2 * Cyc.zeta(5) + Cyc.zeta(5, 2)


def test_inverse_examples():
    assert Cyc.one(7).inv() == Cyc.one(7)
    assert Cyc.zeta(7).inv() == Cyc.zeta(7, 6)
    a = 1 + Cyc.zeta(5)
    assert a * a.inv() == Cyc.one(5)
    assert close(numeric(a.inv()), 1 / numeric(a))
    with pytest.raises(ZeroDivisionError):
        Cyc.zero(5).inv()


def test_conjugation_examples():
    assert Cyc.zeta(7).conj() == Cyc.zeta(7, 6)
    assert Cyc(5, Fraction(3, 2)).conj() == Cyc(5, Fraction(3, 2))
    assert (1 + Cyc.zeta(5, 3)).conj() == 1 + Cyc.zeta(5, 2)


def test_orders():
    assert order_of(Cyc.zeta(21, 3)) == 7
    assert order_of(Cyc.one(21)) == 1
    assert order_of(1 + Cyc.zeta(3)) == 6
    assert order_of(Cyc(5, 2)) is None
    assert order_of(Cyc.zero(5)) is None
    assert root_of_unity(9, 3) == promote(Cyc.zeta(3), 9)


def test_conductor_mismatch():
    with pytest.raises(ConductorMismatch):
        Cyc.zeta(3) + Cyc.zeta(5)
    with pytest.raises(ConductorMismatch):
        promote(Cyc.zeta(4), 6)


@settings(max_examples=60, deadline=None)
@given(same_field(3))
def test_field_axioms(abc):
    a, b, c = abc
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == Cyc.zero(a.N)
    assert hash(a + b) == hash(b + a)


@settings(max_examples=60, deadline=None)
@given(same_field(2))
def test_arithmetic_matches_complex_embedding(ab):
    a, b = ab
    assert close(numeric(a * b), numeric(a) * numeric(b))
    assert close(numeric(a + b), numeric(a) + numeric(b))
    assert close(numeric(a.conj()), numeric(a).conjugate())
    if not a.is_zero():
        assert a * a.inv() == Cyc.one(a.N)


@settings(max_examples=40, deadline=None)
@given(same_field(2), st.sampled_from([2, 3]))
def test_promotion_commutes_with_arithmetic(ab, k):
    a, b = ab
    M = a.N * k
    assert promote(a * b, M) == promote(a, M) * promote(b, M)
    assert promote(a + b, M) == promote(a, M) + promote(b, M)


@settings(max_examples=40, deadline=None)
@given(same_field(2))
def test_json_round_trip_and_specialization(ab):
    a, b = ab
    assert Cyc.from_json(a.to_json()) == a
    spec = ModularSpecialization(a.N)
    P = spec.P
    assert spec(a * b) == spec(a) * spec(b) % P
    assert spec(a + b) == (spec(a) + spec(b)) % P
