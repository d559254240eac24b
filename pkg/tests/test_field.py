"""Tests for the Q(zeta_12) coefficient field."""

import random
from fractions import Fraction

import pytest

from vertexcurve.field import (
    FieldElement,
    I,
    ONE,
    SQRT3,
    ZETA,
    lambda0,
    sqrt_lambda0,
)


def rand_elem(rng):
    return FieldElement(*[Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(4)])


def test_lambda0_quadratic_relation():
    # the Appendix rewrite L0^2 -> L0 - 1, i.e. zeta^2 * zeta^2 = zeta^2 - 1
    for sign in (+1, -1):
        l0 = lambda0(sign)
        assert l0 * l0 == l0 - 1
        assert l0**3 == FieldElement(-1)
        assert l0**6 == ONE


def test_multiplicative_identity():
    rng = random.Random(7)
    for _ in range(20):
        x = rand_elem(rng)
        assert x * ONE == x


def test_two_lambda0_minus_one_squared_is_minus_three():
    # expand (2*zeta^2 - 1)^2 in the basis and reduce by zeta^4 = zeta^2 - 1:
    # 4*zeta^4 - 4*zeta^2 + 1 = 4*(zeta^2 - 1) - 4*zeta^2 + 1 = -3
    x = 2 * lambda0(+1) - 1
    assert x * x == FieldElement(-3)


def test_special_constants():
    assert I * I == FieldElement(-1)
    assert SQRT3 * SQRT3 == FieldElement(3)
    assert abs(SQRT3.to_complex() - 3**0.5) < 1e-15
    assert abs(I.to_complex() - 1j) < 1e-15
    for sign in (+1, -1):
        s = sqrt_lambda0(sign)
        assert s * s == lambda0(sign)
        # lt2 = l0^(-1/2) solves the special-branch quartic lt2^4 - lt2^2 + 1 = 0
        lt2 = s.inverse()
        assert lt2**4 - lt2**2 + 1 == FieldElement(0)


def test_inverse_roundtrip():
    rng = random.Random(11)
    checked = 0
    while checked < 25:
        x = rand_elem(rng)
        if x.is_zero():
            continue
        assert x * x.inverse() == ONE
        checked += 1


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        FieldElement(0).inverse()


def test_ring_axioms_random():
    rng = random.Random(3)
    for _ in range(40):
        x, y, z = rand_elem(rng), rand_elem(rng), rand_elem(rng)
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x
        assert x * y == y * x


def test_conjugation_is_field_automorphism():
    rng = random.Random(5)
    for _ in range(20):
        x, y = rand_elem(rng), rand_elem(rng)
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()
        assert (x + y).conjugate() == x.conjugate() + y.conjugate()
        assert abs(x.conjugate().to_complex() - x.to_complex().conjugate()) < 1e-12


def test_numeric_embedding_consistency():
    rng = random.Random(13)
    for _ in range(20):
        x, y = rand_elem(rng), rand_elem(rng)
        assert abs((x * y).to_complex() - x.to_complex() * y.to_complex()) < 1e-9
