"""Exact arithmetic in the scalar tower used throughout the package.

Every coefficient the library needs lives in the eight-dimensional rational
space spanned by ``{1, i, j, k}`` and their multiples by ``sqrt(2)``: plain
rationals, Gaussian rationals, the tower ``Q(i, sqrt2)``, rational
quaternions, and quaternions over ``Q(sqrt2)``.  Arithmetic is exact and
nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

RationalLike = Union[int, Fraction]

#: Component labels, in serialization order.  Index ``q + 4*s`` holds the
#: coefficient of quaternion unit ``q`` (0=1, 1=i, 2=j, 3=k) times
#: ``sqrt(2)**s``.
BASIS_NAMES = ("1", "i", "j", "k", "sqrt2", "i*sqrt2", "j*sqrt2", "k*sqrt2")

# Quaternion unit products: _QMUL[a][b] = (sign, unit of e_a * e_b).
_QMUL = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (-1, 0), (1, 3), (-1, 2)),
    ((1, 2), (-1, 3), (-1, 0), (1, 1)),
    ((1, 3), (1, 2), (-1, 1), (-1, 0)),
)

_F0 = Fraction(0)
_F1 = Fraction(1)

#: Which components each named variant allows.
VARIANT_COMPONENTS = {
    "rational": frozenset({0}),
    "gauss": frozenset({0, 1}),
    "tower": frozenset({0, 1, 4, 5}),
    "quat": frozenset({0, 1, 2, 3}),
    "quat_sqrt2": frozenset(range(8)),
}


def _coerce_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class Scalar:
    """An element of the quaternion algebra over Q(sqrt2), stored exactly.

    Instances are immutable.  The eight components sit in the order of
    :data:`BASIS_NAMES`.
    """

    __slots__ = ("_c",)

    def __init__(self, components: Sequence[RationalLike]):
        if len(components) != 8:
            raise ValueError("Scalar needs exactly 8 components")
        self._c = tuple(_coerce_fraction(x) for x in components)

    # -- constructors ------------------------------------------------

    @staticmethod
    def rational(x: RationalLike) -> "Scalar":
        return Scalar((_coerce_fraction(x), _F0, _F0, _F0, _F0, _F0, _F0, _F0))

    @staticmethod
    def unit(name: str) -> "Scalar":
        """The basis element named by one of :data:`BASIS_NAMES`."""
        idx = BASIS_NAMES.index(name)
        comps = [_F0] * 8
        comps[idx] = _F1
        return Scalar(comps)

    @staticmethod
    def complex_value(re: RationalLike, im: RationalLike) -> "Scalar":
        return Scalar((_coerce_fraction(re), _coerce_fraction(im),
                       _F0, _F0, _F0, _F0, _F0, _F0))

    @staticmethod
    def quaternion_value(x1: RationalLike, x2: RationalLike,
                         x3: RationalLike, x4: RationalLike) -> "Scalar":
        return Scalar((_coerce_fraction(x1), _coerce_fraction(x2),
                       _coerce_fraction(x3), _coerce_fraction(x4),
                       _F0, _F0, _F0, _F0))

    @property
    def components(self) -> tuple:
        return self._c

    # -- classification ----------------------------------------------

    def variant(self) -> str:
        """Smallest named variant containing this value."""
        support = {idx for idx, c in enumerate(self._c) if c}
        for name in ("rational", "gauss", "tower", "quat", "quat_sqrt2"):
            if support <= VARIANT_COMPONENTS[name]:
                return name
        return "quat_sqrt2"

    def is_zero(self) -> bool:
        return not any(self._c)

    def is_rational(self) -> bool:
        return not any(self._c[1:])

    def is_real(self) -> bool:
        """True when the value lies in Q(sqrt2)."""
        c = self._c
        return not (c[1] or c[2] or c[3] or c[5] or c[6] or c[7])

    def is_complex_like(self) -> bool:
        """True when the value lies in Q(i, sqrt2) (no j or k parts)."""
        c = self._c
        return not (c[2] or c[3] or c[6] or c[7])

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        a, b = self._c, other._c
        return Scalar(tuple(a[t] + b[t] for t in range(8)))

    def __sub__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        a, b = self._c, other._c
        return Scalar(tuple(a[t] - b[t] for t in range(8)))

    def __neg__(self) -> "Scalar":
        return Scalar(tuple(-x for x in self._c))

    def __mul__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        a, b = self._c, other._c
        out = [_F0] * 8
        for ia in range(8):
            ca = a[ia]
            if not ca:
                continue
            qa, sa = ia & 3, ia >> 2
            for ib in range(8):
                cb = b[ib]
                if not cb:
                    continue
                qb, sb = ib & 3, ib >> 2
                sign, q = _QMUL[qa][qb]
                coeff = ca * cb
                if sa and sb:
                    coeff *= 2  # sqrt(2) squared
                    s = 0
                else:
                    s = sa ^ sb
                if sign < 0:
                    coeff = -coeff
                out[q + 4 * s] += coeff
        return Scalar(out)

    def scale(self, x: RationalLike) -> "Scalar":
        f = _coerce_fraction(x)
        return Scalar(tuple(c * f for c in self._c))

    def conjugate(self) -> "Scalar":
        """Standard conjugation: fixes rationals and sqrt(2), negates i, j, k."""
        c = self._c
        return Scalar((c[0], -c[1], -c[2], -c[3], c[4], -c[5], -c[6], -c[7]))

    def norm_real(self) -> "Scalar":
        """The product self * conjugate(self), an element of Q(sqrt2)."""
        return self * self.conjugate()

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("scalar inverse of zero")
        conj = self.conjugate()
        n = (self * conj)._c
        a, b = n[0], n[4]
        # (a + b*sqrt2)^-1 = (a - b*sqrt2) / (a^2 - 2 b^2)
        denom = a * a - 2 * b * b
        return Scalar(tuple(c for c in (conj * Scalar(
            (a / denom, _F0, _F0, _F0, -b / denom, _F0, _F0, _F0)))._c))

    def __truediv__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        return self * other.inverse()

    # -- order (real values only) -------------------------------------

    def sign(self) -> int:
        """Exact sign of a value in Q(sqrt2); raises for non-real values."""
        if not self.is_real():
            raise ValueError("sign is defined only for values in Q(sqrt2)")
        a, b = self._c[0], self._c[4]
        if not a and not b:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        # Opposite signs: compare a^2 with 2 b^2.
        d = a * a - 2 * b * b
        if a > 0:
            return 1 if d > 0 else -1
        return -1 if d > 0 else 1

    # -- decompositions ----------------------------------------------

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("scalar is not rational")
        return self._c[0]

    def real_imag(self) -> tuple:
        """Split a complex-like value as (re, im), both in Q(sqrt2)."""
        if not self.is_complex_like():
            raise ValueError("scalar has quaternion parts")
        c = self._c
        re = Scalar((c[0], _F0, _F0, _F0, c[4], _F0, _F0, _F0))
        im = Scalar((c[1], _F0, _F0, _F0, c[5], _F0, _F0, _F0))
        return re, im

    def complex_pair(self) -> tuple:
        """Split a quaternion as (P, Q) with value ``P + j*Q``, P and Q complex-like.

        Follows the convention ``x1 + x2 i + x3 j + x4 k = P + j Q`` with
        ``P = x1 + x2 i`` and ``Q = x3 - x4 i``.
        """
        c = self._c
        p = Scalar((c[0], c[1], _F0, _F0, c[4], c[5], _F0, _F0))
        q = Scalar((c[2], -c[3], _F0, _F0, c[6], -c[7], _F0, _F0))
        return p, q

    # -- serialization ------------------------------------------------

    def to_json(self) -> list:
        """Component array of "num/den" strings (4 entries when no j/k parts)."""
        c = self._c
        if self.is_complex_like():
            parts = (c[0], c[1], c[4], c[5])
        else:
            parts = c
        return [f"{x.numerator}/{x.denominator}" for x in parts]

    @staticmethod
    def from_json(data) -> "Scalar":
        if isinstance(data, str):
            return Scalar.rational(Fraction(data))
        vals = [Fraction(s) for s in data]
        if len(vals) == 4:
            re1, im1, re2, im2 = vals
            return Scalar((re1, im1, _F0, _F0, re2, im2, _F0, _F0))
        if len(vals) == 8:
            return Scalar(vals)
        raise ValueError("scalar arrays carry 4 or 8 components")

    # -- plumbing ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == Scalar.rational(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        if self.is_zero():
            return "Scalar(0)"
        terms = []
        for idx, c in enumerate(self._c):
            if not c:
                continue
            name = BASIS_NAMES[idx]
            if name == "1":
                terms.append(str(c))
            elif c == 1:
                terms.append(name)
            elif c == -1:
                terms.append(f"-{name}")
            else:
                terms.append(f"{c}*{name}")
        return f"Scalar({' + '.join(terms)})"


ZERO = Scalar.rational(0)
ONE = Scalar.rational(1)
MINUS_ONE = Scalar.rational(-1)
I_UNIT = Scalar.unit("i")
J_UNIT = Scalar.unit("j")
K_UNIT = Scalar.unit("k")
SQRT2 = Scalar.unit("sqrt2")
HALF_SQRT2 = Scalar((_F0, _F0, _F0, _F0, Fraction(1, 2), _F0, _F0, _F0))  # 1/sqrt(2)
I_HALF_SQRT2 = Scalar((_F0, _F0, _F0, _F0, _F0, Fraction(1, 2), _F0, _F0))  # i/sqrt(2)
J_HALF_SQRT2 = Scalar((_F0, _F0, _F0, _F0, _F0, _F0, Fraction(1, 2), _F0))  # j/sqrt(2)


def as_scalar(x) -> Scalar:
    """Coerce an int, Fraction, or Scalar to a Scalar."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.rational(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a Scalar")
