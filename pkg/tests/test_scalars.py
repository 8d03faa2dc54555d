"""Exact scalar tower: rationals, complex, quaternions, and sqrt(2) factors."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from nilorb.scalars import (BASIS_NAMES, I_UNIT, J_UNIT, K_UNIT, MINUS_ONE,
                            ONE, SQRT2, ZERO, Scalar)


def rand_scalar(rng: random.Random) -> Scalar:
    return Scalar([Fraction(rng.randint(-4, 4), rng.randint(1, 4))
                   for _ in range(8)])


def test_quaternion_unit_table():
    assert I_UNIT * I_UNIT == MINUS_ONE
    assert J_UNIT * J_UNIT == MINUS_ONE
    assert K_UNIT * K_UNIT == MINUS_ONE
    assert I_UNIT * J_UNIT == K_UNIT
    assert J_UNIT * K_UNIT == I_UNIT
    assert K_UNIT * I_UNIT == J_UNIT
    assert J_UNIT * I_UNIT == -K_UNIT
    assert I_UNIT * J_UNIT * K_UNIT == MINUS_ONE


def test_sqrt2_squares_to_two():
    assert SQRT2 * SQRT2 == Scalar.rational(2)
    half = Scalar.rational(Fraction(1, 2)) * SQRT2
    assert half * half == Scalar.rational(Fraction(1, 2))


def test_sqrt2_commutes_with_units():
    for u in (I_UNIT, J_UNIT, K_UNIT):
        assert SQRT2 * u == u * SQRT2


def test_ring_axioms_randomized():
    """Associativity and distributivity over random 8-component scalars."""
    rng = random.Random(101)
    for _ in range(60):
        a, b, c = (rand_scalar(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c
        assert a - a == ZERO


def test_conjugation_is_an_antiautomorphism():
    rng = random.Random(102)
    for _ in range(40):
        a, b = rand_scalar(rng), rand_scalar(rng)
        assert (a * b).conjugate() == b.conjugate() * a.conjugate()
        assert a.conjugate().conjugate() == a


def test_conjugate_fixes_reals_and_negates_imaginaries():
    assert SQRT2.conjugate() == SQRT2
    assert I_UNIT.conjugate() == -I_UNIT
    assert J_UNIT.conjugate() == -J_UNIT
    assert K_UNIT.conjugate() == -K_UNIT


def test_norm_is_multiplicative():
    rng = random.Random(103)
    for _ in range(30):
        a, b = rand_scalar(rng), rand_scalar(rng)
        # x * conj(x) is real, so norms multiply whenever it is central.
        assert (a * a.conjugate()).norm_real() == a.norm_real() * a.norm_real()
        assert (a * b).norm_real() == a.norm_real() * b.norm_real()


def test_inverse_and_division():
    rng = random.Random(104)
    checked = 0
    while checked < 25:
        a = rand_scalar(rng)
        if a.is_zero():
            continue
        assert a * a.inverse() == ONE
        assert a.inverse() * a == ONE
        b = rand_scalar(rng)
        assert (b / a) * a == b
        checked += 1
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_sign_in_real_quadratic_field():
    """Exact sign of p + q*sqrt(2) without floating point.

    The oracle: 1 + sqrt2 > 0, 1 - sqrt2 < 0, 3 - 2*sqrt2 > 0 because
    9 > 8, and 7 - 5*sqrt2 < 0 because 49 < 50.
    """
    def real_scalar(p, q):
        return Scalar.rational(p) + Scalar.rational(q) * SQRT2

    assert real_scalar(1, 1).sign() == 1
    assert real_scalar(1, -1).sign() == -1
    assert real_scalar(3, -2).sign() == 1
    assert real_scalar(7, -5).sign() == -1
    assert real_scalar(-3, 2).sign() == -1
    assert real_scalar(0, 0).sign() == 0
    assert Scalar.rational(Fraction(-2, 7)).sign() == -1


def test_sign_rejects_nonreal():
    with pytest.raises(ValueError):
        I_UNIT.sign()


def test_variant_classification():
    assert Scalar.rational(5).variant() == "rational"
    assert Scalar.complex_value(1, 2).variant() == "gauss"
    assert (ONE + SQRT2).variant() == "tower"
    assert J_UNIT.variant() == "quat"
    assert Scalar.quaternion_value(1, 0, 2, 0).variant() == "quat"
    assert (J_UNIT * SQRT2).variant() == "quat_sqrt2"


def test_complex_pair_recomposition():
    """x = P + j*Q with P = x1 + x2 i and Q = x3 - x4 i."""
    rng = random.Random(105)
    for _ in range(30):
        a = rand_scalar(rng)
        p, q = a.complex_pair()
        assert p + J_UNIT * q == a


def test_real_imag_recomposition():
    rng = random.Random(106)
    for _ in range(30):
        c = rand_scalar(rng)
        p, _ = c.complex_pair()  # complex-like sample
        re, im = p.real_imag()
        assert re.is_real() and im.is_real()
        assert re + I_UNIT * im == p
    with pytest.raises(ValueError):
        J_UNIT.real_imag()


def test_json_shape_depends_on_variant():
    assert len(Scalar.rational(3).to_json()) == 4
    assert len(Scalar.complex_value(1, 1).to_json()) == 4
    assert len(J_UNIT.to_json()) == 8
    assert Scalar.rational(Fraction(1, 2)).to_json()[0] == "1/2"


def test_json_round_trip():
    rng = random.Random(107)
    for _ in range(30):
        a = rand_scalar(rng)
        assert Scalar.from_json(a.to_json()) == a
    c = Scalar.complex_value(Fraction(2, 3), -1)
    assert Scalar.from_json(c.to_json()) == c


def test_unit_names_cover_basis():
    for name in BASIS_NAMES:
        u = Scalar.unit(name)
        assert [x != 0 for x in u.components].count(True) == 1
    with pytest.raises(ValueError):
        Scalar.unit("q")
