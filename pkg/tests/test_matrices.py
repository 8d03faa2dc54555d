"""Exact matrix layer: products, block maps, rank, determinants, signatures."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from nilorb.matrices import (DegenerateFormError, ExactMatrix, block_oplus,
                             commutator, complex_to_real_blocks,
                             congruence_signature, conj_transpose, det,
                             inverse, kernel_dim, quaternion_to_complex_blocks,
                             rank, realify, reduced_norm, reduced_trace,
                             repeat_blocks)
from nilorb.scalars import (I_UNIT, J_UNIT, MINUS_ONE, ONE, ZERO, Scalar)


def rational_matrix(rng: random.Random, n: int, m: int | None = None) -> ExactMatrix:
    m = n if m is None else m
    return ExactMatrix([[Scalar.rational(Fraction(rng.randint(-4, 4),
                                                  rng.randint(1, 3)))
                         for _ in range(m)] for _ in range(n)])


def complex_matrix(rng: random.Random, n: int) -> ExactMatrix:
    return ExactMatrix([[Scalar.complex_value(rng.randint(-3, 3),
                                              rng.randint(-3, 3))
                         for _ in range(n)] for _ in range(n)])


def quaternion_matrix(rng: random.Random, n: int) -> ExactMatrix:
    return ExactMatrix([[Scalar.quaternion_value(*(rng.randint(-2, 2)
                                                   for _ in range(4)))
                         for _ in range(n)] for _ in range(n)])


def test_identity_and_product():
    rng = random.Random(1)
    a = rational_matrix(rng, 4)
    i4 = ExactMatrix.identity(4)
    assert a @ i4 == a
    assert i4 @ a == a
    assert (a - a).is_zero()


def test_product_associativity():
    rng = random.Random(2)
    for _ in range(10):
        a = quaternion_matrix(rng, 3)
        b = quaternion_matrix(rng, 3)
        c = quaternion_matrix(rng, 3)
        assert (a @ b) @ c == a @ (b @ c)


def test_transpose_reverses_products_only_with_conjugation():
    """Over the quaternions (A B)^* = B^* A^* needs the conjugate transpose;
    the plain transpose reverses products only for commuting entries."""
    rng = random.Random(3)
    for _ in range(10):
        a = quaternion_matrix(rng, 3)
        b = quaternion_matrix(rng, 3)
        assert conj_transpose(a @ b) == conj_transpose(b) @ conj_transpose(a)
    a = rational_matrix(rng, 3)
    b = rational_matrix(rng, 3)
    assert (a @ b).transpose() == b.transpose() @ a.transpose()


def test_commutator_bilinear_antisymmetric():
    rng = random.Random(4)
    a = rational_matrix(rng, 4)
    b = rational_matrix(rng, 4)
    assert commutator(a, b) == -commutator(b, a)
    assert commutator(a, a).is_zero()


def test_block_oplus_and_repeat():
    a = ExactMatrix([[ONE, ONE], [ZERO, ONE]])
    b = ExactMatrix([[Scalar.rational(2)]])
    s = block_oplus([a, b])
    assert s.nrows == s.ncols == 3
    assert s.entry(0, 1) == ONE
    assert s.entry(2, 2) == Scalar.rational(2)
    assert s.entry(0, 2) == ZERO
    r = repeat_blocks(b, 3)
    assert r.nrows == r.ncols == 3
    assert all(r.entry(t, t) == Scalar.rational(2) for t in range(3))


def test_complex_realification_is_multiplicative():
    rng = random.Random(5)
    for _ in range(15):
        a = complex_matrix(rng, 3)
        b = complex_matrix(rng, 3)
        assert complex_to_real_blocks(a @ b) == (
            complex_to_real_blocks(a) @ complex_to_real_blocks(b))
    assert complex_to_real_blocks(ExactMatrix.identity(3)) == ExactMatrix.identity(6)


def test_quaternion_complexification_is_multiplicative():
    rng = random.Random(6)
    for _ in range(15):
        a = quaternion_matrix(rng, 2)
        b = quaternion_matrix(rng, 2)
        assert quaternion_to_complex_blocks(a @ b) == (
            quaternion_to_complex_blocks(a) @ quaternion_to_complex_blocks(b))
    assert quaternion_to_complex_blocks(ExactMatrix.identity(2)) == ExactMatrix.identity(4)


def test_realify_rank_scaling():
    """Realification multiplies rank by the real dimension of the entry ring."""
    rng = random.Random(7)
    a = complex_matrix(rng, 3)
    assert rank(realify(a)) == 2 * rank_over_c(a)
    q = quaternion_matrix(rng, 2)
    r = realify(q)
    assert r.nrows == 8


def rank_over_c(a: ExactMatrix) -> int:
    # Row-reduce over the complex field using exact scalar division.
    rows = [[a.entry(r, c) for c in range(a.ncols)] for r in range(a.nrows)]
    rank_count = 0
    col = 0
    while rows and col < a.ncols:
        pivot = next((t for t, row in enumerate(rows) if not row[col].is_zero()),
                     None)
        if pivot is None:
            col += 1
            continue
        rows[0], rows[pivot] = rows[pivot], rows[0]
        inv = rows[0][col].inverse()
        lead = [inv * x for x in rows[0]]
        rows = [[row[t] - row[col] * lead[t] for t in range(a.ncols)]
                for row in rows[1:]]
        rank_count += 1
        col += 1
    return rank_count


def test_rank_and_kernel_on_known_matrices():
    n = ExactMatrix([[ZERO, ONE, ZERO], [ZERO, ZERO, ONE], [ZERO, ZERO, ZERO]])
    assert rank(n) == 2
    assert kernel_dim(n) == 1
    assert rank(n @ n) == 1
    assert rank(n @ n @ n) == 0
    assert rank(ExactMatrix.identity(5)) == 5


def test_det_multiplicative_and_inverse():
    rng = random.Random(8)
    done = 0
    while done < 10:
        a = complex_matrix(rng, 3)
        b = complex_matrix(rng, 3)
        assert det(a @ b) == det(a) * det(b)
        if det(a).is_zero():
            continue
        assert a @ inverse(a) == ExactMatrix.identity(3)
        done += 1


def test_det_rejects_quaternion_entries():
    m = ExactMatrix([[J_UNIT]])
    with pytest.raises(ValueError):
        det(m)


def test_quaternion_inverse():
    rng = random.Random(9)
    done = 0
    while done < 8:
        a = quaternion_matrix(rng, 2)
        if rank(realify(a)) < 8:
            continue
        assert a @ inverse(a) == ExactMatrix.identity(2)
        assert inverse(a) @ a == ExactMatrix.identity(2)
        done += 1


def test_congruence_signature_examples():
    def diag(*entries):
        n = len(entries)
        return ExactMatrix([[Scalar.rational(entries[r]) if r == c else ZERO
                             for c in range(n)] for r in range(n)])

    assert congruence_signature(diag(1, 1, -1)) == (2, 1)
    assert congruence_signature(diag(-2, -3, -4, 5)) == (1, 3)
    # A hyperbolic plane has one positive and one negative direction.
    hyp = ExactMatrix([[ZERO, ONE], [ONE, ZERO]])
    assert congruence_signature(hyp) == (1, 1)
    with pytest.raises(DegenerateFormError):
        congruence_signature(diag(1, 0))


def test_congruence_signature_is_congruence_invariant():
    rng = random.Random(10)
    base = ExactMatrix([[Scalar.rational(x) if r == c else ZERO
                         for c, x in enumerate((1, 1, -1, -1))]
                        for r in range(4)])
    for _ in range(6):
        t = rational_matrix(rng, 4)
        if rank(t) < 4:
            continue
        assert congruence_signature(t.transpose() @ base @ t) == (2, 2)


def test_reduced_trace_and_norm():
    # Trd(q) = q + conj(q) on 1x1 matrices; Nrd(q) = q * conj(q).
    q = Scalar.quaternion_value(2, 1, -1, 3)
    m = ExactMatrix([[q]])
    assert reduced_trace(m) == Fraction(4)
    assert reduced_norm(m) == q * q.conjugate()
    rng = random.Random(11)
    for _ in range(8):
        a = quaternion_matrix(rng, 2)
        b = quaternion_matrix(rng, 2)
        assert reduced_norm(a @ b) == reduced_norm(a) * reduced_norm(b)
        assert reduced_trace(a + b) == reduced_trace(a) + reduced_trace(b)


def test_matrix_json_round_trip():
    rng = random.Random(12)
    a = quaternion_matrix(rng, 2)
    data = a.to_json()
    assert ExactMatrix.from_json(data) == a
