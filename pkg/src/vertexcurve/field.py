"""Exact arithmetic in the cyclotomic field Q(zeta_12).

Every constant the workbench needs lives in this single field: the primitive
twelfth root of unity zeta = exp(i*pi/6), the sixth roots exp(+-i*pi/3), the
imaginary unit i = zeta^3, sqrt(3) = 2*zeta - zeta^3, and the quartic roots of
L^4 - L^2 + 1 = 0 used by the special branch.

An element is stored by its coordinates (c0, c1, c2, c3) in the power basis
{1, zeta, zeta^2, zeta^3} with the defining relation

    zeta^4 = zeta^2 - 1,

which is the minimal polynomial x^4 - x^2 + 1 of zeta over Q.  All operations
re-reduce into this basis, so in particular zeta^6 = -1 and
(zeta^2)^2 = zeta^2 - 1 hold automatically.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rat = Union[int, Fraction]


class FieldElement:
    """An element c0 + c1*zeta + c2*zeta^2 + c3*zeta^3 of Q(zeta_12)."""

    __slots__ = ("c",)

    def __init__(self, c0: Rat = 0, c1: Rat = 0, c2: Rat = 0, c3: Rat = 0):
        self.c = (Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3))

    @staticmethod
    def _make(coords) -> "FieldElement":
        el = FieldElement.__new__(FieldElement)
        el.c = tuple(coords)
        return el

    @classmethod
    def from_rational(cls, q: Rat) -> "FieldElement":
        return cls(q)

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------
    def __add__(self, other) -> "FieldElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        return FieldElement._make((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        a = self.c
        return FieldElement._make((-a[0], -a[1], -a[2], -a[3]))

    def __sub__(self, other) -> "FieldElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        return FieldElement._make((a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]))

    def __rsub__(self, other) -> "FieldElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "FieldElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a0, a1, a2, a3 = self.c
        b0, b1, b2, b3 = other.c
        # raw convolution up to zeta^6
        e0 = a0 * b0
        e1 = a0 * b1 + a1 * b0
        e2 = a0 * b2 + a1 * b1 + a2 * b0
        e3 = a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
        e4 = a1 * b3 + a2 * b2 + a3 * b1
        e5 = a2 * b3 + a3 * b2
        e6 = a3 * b3
        # fold with zeta^4 = zeta^2 - 1, zeta^5 = zeta^3 - zeta, zeta^6 = -1
        return FieldElement._make((e0 - e4 - e6, e1 - e5, e2 + e4, e3 + e5))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero field element")
        # Solve self * x = 1 as a 4x4 rational linear system.  Columns are the
        # basis images self * zeta^k expressed in the power basis.
        cols = []
        power = ONE
        for _ in range(4):
            cols.append((self * power).c)
            power = power * ZETA
        # Gaussian elimination on the transposed system.
        mat = [[cols[j][i] for j in range(4)] for i in range(4)]
        rhs = [Fraction(1), Fraction(0), Fraction(0), Fraction(0)]
        for col in range(4):
            piv = next(r for r in range(col, 4) if mat[r][col] != 0)
            mat[col], mat[piv] = mat[piv], mat[col]
            rhs[col], rhs[piv] = rhs[piv], rhs[col]
            inv_p = 1 / mat[col][col]
            mat[col] = [x * inv_p for x in mat[col]]
            rhs[col] *= inv_p
            for r in range(4):
                if r != col and mat[r][col] != 0:
                    f = mat[r][col]
                    mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
                    rhs[r] -= f * rhs[col]
        return FieldElement._make(tuple(rhs))

    def __truediv__(self, other) -> "FieldElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "FieldElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ------------------------------------------------------------------
    # predicates & conversions
    # ------------------------------------------------------------------
    def is_zero(self) -> bool:
        a = self.c
        return not (a[0] or a[1] or a[2] or a[3])

    def is_rational(self) -> bool:
        a = self.c
        return not (a[1] or a[2] or a[3])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.c[0]

    def conjugate(self) -> "FieldElement":
        """Complex conjugation, i.e. zeta -> zeta^-1 = zeta - zeta^3."""
        a = self.c
        # zeta^-1 = zeta - zeta^3, zeta^-2 = 1 - zeta^2, zeta^-3 = -zeta^3
        out = (a[0] + a[2], a[1], -a[2], -a[1] - a[3])
        return FieldElement._make(out)

    def to_complex(self) -> complex:
        a = self.c
        return (
            float(a[0])
            + float(a[1]) * _ZETA_C
            + float(a[2]) * _ZETA_C2
            + float(a[3]) * _ZETA_C3
        )

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        names = ("", "*z", "*z^2", "*z^3")
        parts = [f"{coef}{name}" for coef, name in zip(self.c, names) if coef]
        return "Fe(" + (" + ".join(parts) if parts else "0") + ")"


def _coerce(x) -> FieldElement:
    if isinstance(x, FieldElement):
        return x
    if isinstance(x, (int, Fraction)):
        return FieldElement(x)
    return NotImplemented


_ZETA_C = complex(3**0.5 / 2, 0.5)  # exp(i*pi/6)
_ZETA_C2 = _ZETA_C * _ZETA_C
_ZETA_C3 = _ZETA_C2 * _ZETA_C

ZERO = FieldElement(0)
ONE = FieldElement(1)
ZETA = FieldElement(0, 1)          # exp(i*pi/6)
I = FieldElement(0, 0, 0, 1)       # zeta^3
SQRT3 = FieldElement(0, 2, 0, -1)  # 2*zeta - zeta^3


def lambda0(sign: int = +1) -> FieldElement:
    """exp(+-i*pi/3): zeta^2 for sign=+1, 1 - zeta^2 for sign=-1."""
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    return FieldElement(0, 0, 1, 0) if sign > 0 else FieldElement(1, 0, -1, 0)


def sqrt_lambda0(sign: int = +1) -> FieldElement:
    """Principal square root exp(+-i*pi/6) of lambda0(sign)."""
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    return ZETA if sign > 0 else ZETA.conjugate()
