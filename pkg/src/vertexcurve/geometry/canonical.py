"""Canonical curves and surfaces of the two vertex-model families.

All objects are exact homogeneous polynomials over Q(zeta_12).  The free
parameters may be rationals or field elements (the latter is needed when a
parameter is eliminated along one of the degeneration submanifolds, where it
picks up twelfth-root-of-unity factors).

Two corrections to printed displays are applied here, both forced by
cross-checks within the source material (see the curve tests):

* the sextic family curve carries the full quartic factor
  a^4 + a^2 b^2 + b^4 + l4*a*b*c^2 -- the b^4 term is required for the
  quadratic-cover image, the c^4 power-substitution identity and the divisor
  elimination to be mutually consistent;
* the octic family curve uses the projective display, whose affine reduction
  differs from the separately printed affine form in a few signs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from ..field import FieldElement, I, SQRT3, lambda0, sqrt_lambda0
from ..poly import MultiPoly

Scalar = Union[int, Fraction, FieldElement]

CURVE_VARS = ("a", "b", "c")
SURFACE_VARS = ("a", "b", "bb", "c")
IMAGE_VARS = ("x", "y", "z")
TILDE_VARS = ("x1", "y1", "z1")


@dataclass(frozen=True)
class ProjectiveCurve:
    poly: MultiPoly
    degree: int
    label: str

    def __post_init__(self):
        if len(self.poly.variables) != 3:
            raise ValueError("a plane curve needs exactly three homogeneous coordinates")
        if not self.poly.is_homogeneous():
            raise ValueError(f"curve {self.label} is not homogeneous")
        if self.poly.total_degree() != self.degree:
            raise ValueError(f"curve {self.label} has degree {self.poly.total_degree()}, expected {self.degree}")


@dataclass(frozen=True)
class ProjectiveSurface:
    poly: MultiPoly
    degree: int
    label: str

    def __post_init__(self):
        if len(self.poly.variables) != 4:
            raise ValueError("a surface in CP3 needs four homogeneous coordinates")
        if not self.poly.is_homogeneous():
            raise ValueError(f"surface {self.label} is not homogeneous")
        if self.poly.total_degree() != self.degree:
            raise ValueError(f"surface {self.label} has degree {self.poly.total_degree()}, expected {self.degree}")


def _mono(variables, coef: Scalar, **powers) -> MultiPoly:
    return MultiPoly.monomial(variables, coef, **powers)


# ----------------------------------------------------------------------
# surfaces of the two-parameter family
# ----------------------------------------------------------------------
def surface_s1(eps1: Scalar, eps2: Scalar) -> ProjectiveSurface:
    """Cubic surface a(b^2 + bb^2) + (eps1 a^2 + eps2 b^2) bb - eps2 b c^2."""
    V = SURFACE_VARS
    p = (
        _mono(V, 1, a=1, b=2)
        + _mono(V, 1, a=1, bb=2)
        + _mono(V, eps1, a=2, bb=1)
        + _mono(V, eps2, b=2, bb=1)
        - _mono(V, eps2, b=1, c=2)
    )
    return ProjectiveSurface(p, 3, "S1")


def surface_s2(eps1: Scalar, eps2: Scalar) -> ProjectiveSurface:
    """Quartic cone (independent of c) whose section is an elliptic curve."""
    V = SURFACE_VARS
    e1 = FieldElement(eps1) if not isinstance(eps1, FieldElement) else eps1
    e2 = FieldElement(eps2) if not isinstance(eps2, FieldElement) else eps2
    p = (
        _mono(V, e1 * e1, a=2, bb=2)
        - _mono(V, e2 * e2, a=2, b=2)
        + _mono(V, 2 * e1, a=1, bb=3)
        + _mono(V, 1, bb=4)
        - _mono(V, e1 * e2 - e2 * e2 - 2, b=2, bb=2)
        - _mono(V, e1 * e2 - 1, b=4)
        - _mono(V, e1 * e1 * e2 - e1 * e2 * e2 - 2 * e1 + e2**3, a=1, b=2, bb=1)
    )
    return ProjectiveSurface(p, 4, "S2")


# ----------------------------------------------------------------------
# plane curves
# ----------------------------------------------------------------------
def _phi4(variables, va: str, vb: str) -> MultiPoly:
    """a^4 + a^2 b^2 + b^4 in the given pair of variables."""
    return (
        _mono(variables, 1, **{va: 4})
        + _mono(variables, 1, **{va: 2, vb: 2})
        + _mono(variables, 1, **{vb: 4})
    )


def curve_c1(eps1: Scalar, eps2: Scalar) -> ProjectiveCurve:
    """The genus-five octic of the two-parameter family (projective display)."""
    V = CURVE_VARS
    e1 = FieldElement(eps1) if not isinstance(eps1, FieldElement) else eps1
    e2 = FieldElement(eps2) if not isinstance(eps2, FieldElement) else eps2
    phi = _phi4(V, "a", "b")
    abc2 = _mono(V, 1, a=1, b=1, c=2)
    head = phi * phi * (e1 * e2 - 1)
    mid = (phi * e2 + abc2) * abc2 * (2 + e1 * e1 - e1 * e2 + e2 * e2)
    tail_bracket = (
        _mono(V, e1 * e2 - 2, a=4)
        + _mono(V, 2 - e1 * e2 + e2 * e2, b=4)
        - _mono(V, e2 * e2, a=2, b=2)
        + _mono(V, 2 * e2, a=1, b=1, c=2)
        + _mono(V, 1, c=4)
    )
    p = head + mid - tail_bracket * _mono(V, 1, c=4)
    return ProjectiveCurve(p, 8, "C1")


def curve_q1(eps1: Scalar, eps2: Scalar) -> ProjectiveCurve:
    """Image octic of C1 under [a:b:c] -> [a^2:ab:c^2]; genus one."""
    V = IMAGE_VARS
    e1 = FieldElement(eps1) if not isinstance(eps1, FieldElement) else eps1
    e2 = FieldElement(eps2) if not isinstance(eps2, FieldElement) else eps2
    phi = _phi4(V, "x", "y")
    xxyz = _mono(V, 1, x=2, y=1, z=1)
    head = phi * phi * (e1 * e2 - 1)
    mid = (phi * e2 + xxyz) * xxyz * (2 + e1 * e1 - e1 * e2 + e2 * e2)
    tail_bracket = (
        _mono(V, e1 * e2 - 2, x=4)
        + _mono(V, 2 - e1 * e2 + e2 * e2, y=4)
        - _mono(V, e2 * e2, x=2, y=2)
        + _mono(V, 2 * e2, x=2, y=1, z=1)
        + _mono(V, 1, x=2, z=2)
    )
    p = head + mid - tail_bracket * _mono(V, 1, x=2, z=2)
    return ProjectiveCurve(p, 8, "Q1")


def curve_c2(l4: Scalar, l0_sign: int = +1) -> ProjectiveCurve:
    """The genus-five sextic of the one-parameter family."""
    V = CURVE_VARS
    l0 = lambda0(l0_sign)
    lead = _mono(V, 1, a=2) + _mono(V, l0, b=2)
    inner = _phi4(V, "a", "b") + _mono(V, l4, a=1, b=1, c=2)
    p = lead * inner + (_mono(V, 1, b=2) - _mono(V, 1, a=2)) * _mono(V, 1, c=4)
    return ProjectiveCurve(p, 6, "C2")


def curve_q2(l4: Scalar, l0_sign: int = +1) -> ProjectiveCurve:
    """Image sextic of C2 under the quadratic cover."""
    V = IMAGE_VARS
    l0 = lambda0(l0_sign)
    lead = _mono(V, 1, x=2) + _mono(V, l0, y=2)
    inner = _phi4(V, "x", "y") + _mono(V, l4, x=2, y=1, z=1)
    p = lead * inner + (_mono(V, 1, y=2) - _mono(V, 1, x=2)) * _mono(V, 1, x=2, z=2)
    return ProjectiveCurve(p, 6, "Q2")


def curve_q2_tilde(l4: Scalar, l0_sign: int = +1) -> ProjectiveCurve:
    """Quartic x1^2 z1^2 - (4/l0) y1^4 - (4 l0 - l4^2) x1^2 y1^2 + 4 x1^4."""
    V = TILDE_VARS
    l0 = lambda0(l0_sign)
    l4f = FieldElement(l4) if not isinstance(l4, FieldElement) else l4
    p = (
        _mono(V, 1, x1=2, z1=2)
        - _mono(V, 4 * l0.inverse(), y1=4)
        - _mono(V, 4 * l0 - l4f * l4f, x1=2, y1=2)
        + _mono(V, 4, x1=4)
    )
    return ProjectiveCurve(p, 4, "Q2tilde")


# ----------------------------------------------------------------------
# the eliminated weight bb as a ratio of polynomials
# ----------------------------------------------------------------------
def bbar_main(eps1: Scalar, eps2: Scalar) -> Tuple[MultiPoly, MultiPoly]:
    """Numerator and denominator of bb on the octic (main family)."""
    V = CURVE_VARS
    e1 = FieldElement(eps1) if not isinstance(eps1, FieldElement) else eps1
    e2 = FieldElement(eps2) if not isinstance(eps2, FieldElement) else eps2
    phi = _phi4(V, "a", "b")
    num = (
        (_mono(V, e2 - e1, a=2) + _mono(V, e2, b=2)) * _mono(V, 1, b=1, c=2)
        - _mono(V, 1, a=1) * (phi - _mono(V, 1, c=4))
    )
    den = phi * e2 + _mono(V, 2, a=1, b=1, c=2)
    return num, den


def bbar_special(l0_sign: int = +1) -> Tuple[MultiPoly, MultiPoly]:
    """Numerator and denominator of bb on the sextic (special family)."""
    V = CURVE_VARS
    l0 = lambda0(l0_sign)
    num = _mono(V, l0, b=1, c=2)
    den = _mono(V, 1, a=2) + _mono(V, l0, b=2)
    return num, den


# ----------------------------------------------------------------------
# quadratic cover and its components
# ----------------------------------------------------------------------
def quadratic_cover_components() -> Tuple[MultiPoly, MultiPoly, MultiPoly]:
    """The map [a:b:c] -> [a^2 : ab : c^2] as polynomials in the curve chart."""
    V = CURVE_VARS
    return (_mono(V, 1, a=2), _mono(V, 1, a=1, b=1), _mono(V, 1, c=2))


# ----------------------------------------------------------------------
# degeneration quartic on the linear submanifolds
# ----------------------------------------------------------------------
def eps2_on_mani1(eps1: Scalar, sign: int = +1) -> FieldElement:
    """Solve the linear submanifold for eps2:
    eps2*exp(+-i pi/6) - eps1*exp(-+i pi/6) -+ 2i = 0."""
    e1 = FieldElement(eps1) if not isinstance(eps1, FieldElement) else eps1
    w = sqrt_lambda0(sign)  # exp(+-i pi/6)
    return (e1 * w.conjugate() + 2 * I * (1 if sign > 0 else -1)) / w


def quartic_g(eps1: Scalar, sign: int = +1) -> ProjectiveCurve:
    """Quartic factor of the octic on the linear submanifold (both signs)."""
    V = CURVE_VARS
    e1 = FieldElement(eps1) if not isinstance(eps1, FieldElement) else eps1
    s = 1 if sign > 0 else -1
    half = Fraction(1, 2)
    i3 = I * SQRT3
    coef_a4 = FieldElement(-half) + s * half * i3 + e1
    coef_a3b = s * (FieldElement(-1) - s * i3 - e1 + s * i3 * e1)
    coef_a2b2 = FieldElement(Fraction(3, 2)) + s * half * i3 - s * i3 * e1
    coef_ab3 = s * (FieldElement(-2) + e1 + s * i3 * e1)
    coef_b4 = FieldElement(half) - s * half * i3 - e1
    coef_a2c2 = s * (FieldElement(-1) + s * i3 + e1)
    coef_abc2 = FieldElement(-2) + half * e1 + s * half * i3 * e1
    coef_b2c2 = s * (FieldElement(-1) - s * i3 - half * e1 + s * half * i3 * e1)
    coef_c4 = FieldElement(-half) + s * half * i3
    p = (
        _mono(V, coef_a4, a=4)
        + _mono(V, coef_a3b, a=3, b=1)
        + _mono(V, coef_a2b2, a=2, b=2)
        + _mono(V, coef_ab3, a=1, b=3)
        + _mono(V, coef_b4, b=4)
        + _mono(V, coef_a2c2, a=2, c=2)
        + _mono(V, coef_abc2, a=1, b=1, c=2)
        + _mono(V, coef_b2c2, b=2, c=2)
        + _mono(V, coef_c4, c=4)
    )
    return ProjectiveCurve(p, 4, "g_quartic")


def reflect_curve(curve: ProjectiveCurve, label: Optional[str] = None) -> ProjectiveCurve:
    """The companion factor f(-a, b, i*c) appearing in the split identities."""
    V = curve.poly.variables
    out = {}
    for exp, coef in curve.poly.terms.items():
        ea, _, ec = exp
        factor = FieldElement(-1 if ea % 2 else 1) * (I**ec)
        new = coef * factor
        if not new.is_zero():
            out[exp] = new
    p = MultiPoly(V, out)
    return ProjectiveCurve(p, curve.degree, label or (curve.label + "_reflected"))
