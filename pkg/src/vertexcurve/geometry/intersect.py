"""Intersection of the cubic and quartic surfaces, covers, normal forms.

The elimination follows the degree-lowering ladder: write both surfaces as
univariate polynomials in the weight bb, combine them so the top and bottom
coefficients cancel,

    new_1 = (B0*A - A0*B) / bb        (kills the constant term),
    new_2 =  Btop*A - Atop*B          (kills the top term),

and iterate until both combinations are linear in bb; eliminating bb between
the two linear relations yields a polynomial in (a, b, c) that the octic
divides exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..field import FieldElement, I, ONE, lambda0
from ..poly import MultiPoly, NotDivisible, exact_divide
from .canonical import (
    CURVE_VARS,
    ProjectiveCurve,
    bbar_main,
    curve_c1,
    curve_c2,
    curve_q1,
    curve_q2,
    curve_q2_tilde,
    quadratic_cover_components,
    surface_s1,
    surface_s2,
)

SURFACE_VARS = ("a", "b", "bb", "c")


class DegenerateParameters(ValueError):
    """The elimination ladder hit a vanishing leading coefficient; the
    parameters sit on a degeneration submanifold (see geometry.degenerate)."""


@dataclass
class IntersectionResult:
    eliminant: MultiPoly
    octic: ProjectiveCurve
    cofactor: MultiPoly
    bbar_num: MultiPoly
    bbar_den: MultiPoly
    line_orders: Dict[str, int]
    bezout: Dict[str, int]
    checks: Dict[str, bool]


def _as_bb_coeffs(p: MultiPoly) -> List[MultiPoly]:
    d = p.degree_in("bb")
    return [p.coefficient_of("bb", k) for k in range(d + 1)]


def _ladder_step(a_poly: MultiPoly, b_poly: MultiPoly) -> Tuple[MultiPoly, MultiPoly]:
    """One rung: produce two combinations with bb-degree lowered by one."""
    da = a_poly.degree_in("bb")
    db = b_poly.degree_in("bb")
    a0 = a_poly.coefficient_of("bb", 0)
    b0 = b_poly.coefficient_of("bb", 0)
    atop = a_poly.coefficient_of("bb", da)
    btop = b_poly.coefficient_of("bb", db)
    if a0.is_zero() or b0.is_zero() or atop.is_zero() or btop.is_zero():
        raise DegenerateParameters("a ladder coefficient vanished; parameters are degenerate")
    bb = MultiPoly.var(a_poly.variables, "bb")
    if da == db:
        low = b0 * a_poly - a0 * b_poly
        high = btop * a_poly - atop * b_poly
    else:
        # initial rung with degrees (2, 4): pad the quadratic by bb^2
        low = b0 * a_poly - a0 * b_poly
        high = btop * (bb ** (db - da)) * a_poly - atop * b_poly
    low_div = exact_divide(low, bb)
    if isinstance(low_div, NotDivisible):
        raise ArithmeticError("constant-term cancellation failed in the ladder")
    target = max(da, db) - 1
    if low_div.degree_in("bb") > target or high.degree_in("bb") > target:
        raise ArithmeticError("ladder failed to lower the bb-degree")
    if low_div.degree_in("bb") < 1 or high.degree_in("bb") < 1:
        raise DegenerateParameters("ladder collapsed early; parameters are degenerate")
    return low_div, high


def intersect_surfaces(eps1: Fraction, eps2: Fraction) -> IntersectionResult:
    """Eliminate bb from the surface pair and certify the octic component."""
    s1 = surface_s1(eps1, eps2).poly
    s2 = surface_s2(eps1, eps2).poly
    a_poly, b_poly = s1, s2
    while max(a_poly.degree_in("bb"), b_poly.degree_in("bb")) > 1:
        a_poly, b_poly = _ladder_step(a_poly, b_poly)
    # a_poly = alpha*bb + beta, b_poly = gamma*bb + delta
    alpha = a_poly.coefficient_of("bb", 1)
    beta = a_poly.coefficient_of("bb", 0)
    gamma = b_poly.coefficient_of("bb", 1)
    delta = b_poly.coefficient_of("bb", 0)
    eliminant4 = alpha * delta - beta * gamma
    eliminant = eliminant4.rename(CURVE_VARS, {"a": "a", "b": "b", "c": "c"})
    octic = curve_c1(eps1, eps2)
    quotient = exact_divide(eliminant, octic.poly.rename(CURVE_VARS, {}))
    if isinstance(quotient, NotDivisible):
        raise ArithmeticError("eliminant is not divisible by the octic")

    checks: Dict[str, bool] = {"eliminant_divisible_by_octic": True}

    # bb from the linear relation, certified against the closed form modulo C1
    num_closed, den_closed = bbar_main(eps1, eps2)
    alpha_c = alpha.rename(CURVE_VARS, {})
    beta_c = beta.rename(CURVE_VARS, {})
    cross = alpha_c * num_closed + beta_c * den_closed
    cross_div = exact_divide(cross, octic.poly)
    checks["bbar_matches_closed_form_mod_octic"] = not isinstance(cross_div, NotDivisible)

    # substituting the closed-form bb back into both surfaces must give
    # numerators exactly divisible by the octic
    for name, surf in (("s1", s1), ("s2", s2)):
        numerator = _substitute_bb_ratio(surf, num_closed, den_closed)
        out = exact_divide(numerator, octic.poly)
        checks[f"{name}_pullback_divisible_by_octic"] = not isinstance(out, NotDivisible)

    orders = {
        "l1": _line_intersection_order(s1, s2, eps1, eps2, line="l1"),
        "l2": _line_intersection_order(s1, s2, eps1, eps2, line="l2"),
    }
    bezout = {
        "deg_s1_times_deg_s2": 12,
        "account": orders["l1"] * 1 + orders["l2"] * 1 + 1 * octic.degree,
    }
    checks["bezout_12_equals_2_plus_2_plus_8"] = bezout["account"] == bezout["deg_s1_times_deg_s2"]

    return IntersectionResult(
        eliminant=eliminant,
        octic=octic,
        cofactor=quotient,
        bbar_num=num_closed,
        bbar_den=den_closed,
        line_orders=orders,
        bezout=bezout,
        checks=checks,
    )


def _substitute_bb_ratio(surf: MultiPoly, num: MultiPoly, den: MultiPoly) -> MultiPoly:
    """surf with bb -> num/den, cleared: sum_k coeff_k * num^k * den^(d-k)."""
    d = surf.degree_in("bb")
    total = MultiPoly.zero(CURVE_VARS)
    for k in range(d + 1):
        coeff = surf.coefficient_of("bb", k).rename(CURVE_VARS, {})
        total = total + coeff * num**k * den ** (d - k)
    return total


# ----------------------------------------------------------------------
# intersection multiplicity along the singular lines, by branch expansion
# ----------------------------------------------------------------------
def _line_intersection_order(
    s1: MultiPoly,
    s2: MultiPoly,
    eps1: Fraction,
    eps2: Fraction,
    line: str,
    nterms: int = 8,
) -> int:
    """Vanishing order in b of s2 along the s1-branch through the line.

    Expand around a generic point of the line (a = 1, c = c0): solve
    s1(1, t, bb(t), c0) = 0 for the branch with bb(0) on the line, then read
    the order of s2(1, t, bb(t)) in t.  The order is checked at two generic
    c0 values to guard against accidental degeneration.
    """
    orders = []
    for c0 in (Fraction(3, 2), Fraction(5, 7)):
        base = -Fraction(eps1) if line == "l2" else Fraction(0)
        series = _solve_branch_series(s1, eps1, eps2, c0, base, nterms)
        vals = _series_eval(s2, eps1, eps2, c0, base, series, nterms)
        order = next((k for k, c in enumerate(vals) if c != 0), None)
        if order is None:
            raise ArithmeticError("branch series did not separate the surfaces")
        orders.append(order)
    if orders[0] != orders[1]:
        raise ArithmeticError(f"intersection order along {line} is not generic: {orders}")
    return orders[0]


def _series_mul(x: List[Fraction], y: List[Fraction], n: int) -> List[Fraction]:
    out = [Fraction(0)] * n
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j, yj in enumerate(y):
            if i + j >= n:
                break
            out[i + j] += xi * yj
    return out


def _series_pow(x: List[Fraction], k: int, n: int) -> List[Fraction]:
    out = [Fraction(0)] * n
    out[0] = Fraction(1)
    for _ in range(k):
        out = _series_mul(out, x, n)
    return out


def _solve_branch_series(
    s1: MultiPoly, eps1: Fraction, eps2: Fraction, c0: Fraction, base: Fraction, n: int
) -> List[Fraction]:
    """Power series eta(t) with s1(1, t, base + eta(t), c0) = 0, eta(0) = 0."""
    # Reduce s1 to a polynomial in (b=t, bb) with a = 1, c = c0.
    p = s1.evaluate({"a": FieldElement(1), "c": FieldElement(c0)})
    d = p.degree_in("bb")
    coeffs_in_bb: List[List[Fraction]] = []
    for k in range(d + 1):
        ck = p.coefficient_of("bb", k)
        as_b = [Fraction(0)] * n
        for exp, coef in ck.terms.items():
            bpow = exp[SURFACE_VARS.index("b")]
            if bpow < n:
                as_b[bpow] += coef.rational_value()
        coeffs_in_bb.append(as_b)
    # shift bb -> base + eta: collect polynomial in eta with series coefficients
    from math import comb

    eta_coeffs: List[List[Fraction]] = [[Fraction(0)] * n for _ in range(d + 1)]
    for k in range(d + 1):
        for j in range(k + 1):
            factor = comb(k, j) * base ** (k - j)
            if factor == 0:
                continue
            for idx in range(n):
                eta_coeffs[j][idx] += coeffs_in_bb[k][idx] * factor
    # Newton/fixed-point: linear coefficient must be a unit at t = 0
    lin0 = eta_coeffs[1][0]
    if lin0 == 0:
        raise ArithmeticError("branch is not transversal in bb; cannot expand")
    eta = [Fraction(0)] * n
    for _ in range(n + 2):
        # residual = sum_j eta_coeffs[j] * eta^j
        res = [Fraction(0)] * n
        for j in range(d + 1):
            term = _series_mul(eta_coeffs[j], _series_pow(eta, j, n), n)
            for idx in range(n):
                res[idx] += term[idx]
        if all(x == 0 for x in res):
            break
        eta = [eta[idx] - res[idx] / lin0 for idx in range(n)]
        eta[0] = Fraction(0)
    return eta


def _series_eval(
    s2: MultiPoly, eps1: Fraction, eps2: Fraction, c0: Fraction, base: Fraction, eta: List[Fraction], n: int
) -> List[Fraction]:
    p = s2.evaluate({"a": FieldElement(1), "c": FieldElement(c0)})
    d = p.degree_in("bb")
    out = [Fraction(0)] * n
    from math import comb

    for k in range(d + 1):
        ck = p.coefficient_of("bb", k)
        as_b = [Fraction(0)] * n
        for exp, coef in ck.terms.items():
            bpow = exp[SURFACE_VARS.index("b")]
            if bpow < n:
                as_b[bpow] += coef.rational_value()
        # (base + eta)^k
        for j in range(k + 1):
            factor = comb(k, j) * base ** (k - j)
            if factor == 0:
                continue
            term = _series_mul(as_b, _series_pow(eta, j, n), n)
            for idx in range(n):
                out[idx] += term[idx] * factor
    return out


# ----------------------------------------------------------------------
# quadratic covers
# ----------------------------------------------------------------------
def apply_quadratic_cover(curve: ProjectiveCurve, image: ProjectiveCurve, seed: int = 11) -> dict:
    """Verify image(a^2, ab, c^2) == monomial * curve and count fibers."""
    xs, ys, zs = quadratic_cover_components()
    pulled = image.poly.rename(CURVE_VARS, {"x": "a", "y": "b", "z": "c"}).substitute(
        {"a": xs, "b": ys, "c": zs}
    )
    quotient = exact_divide(pulled, curve.poly)
    monomial_cofactor = (not isinstance(quotient, NotDivisible)) and quotient.num_terms() == 1
    fiber = _fiber_cardinality(curve, seed)
    return {
        "pullback_exact": not isinstance(quotient, NotDivisible),
        "cofactor_is_monomial": monomial_cofactor,
        "cofactor": None if isinstance(quotient, NotDivisible) else quotient,
        "fiber_cardinality": fiber,
    }


def _fiber_cardinality(curve: ProjectiveCurve, seed: int, npoints: int = 10) -> int:
    """Generic fiber cardinality of [a:b:c] -> [a^2:ab:c^2] on the curve.

    Candidate preimages of the image of (a,b,c) are [a:b:c] and [a:b:-c];
    count how many distinct projective points land on the curve.
    """
    rng = np.random.default_rng(seed)
    names = curve.poly.variables
    counts = []
    attempts = 0
    while len(counts) < npoints and attempts < 200:
        attempts += 1
        b0 = 0.4 + rng.random() * 1.2 + 1j * (rng.random() - 0.5)
        c0 = 1.0
        coeffs = _univariate_in(curve.poly, names[0], {names[1]: b0, names[2]: c0})
        roots = np.roots(coeffs[::-1])
        for a0 in roots:
            if abs(a0) < 1e-8 or abs(b0) < 1e-8:
                continue
            pts = [(a0, b0, c0), (a0, b0, -c0)]
            on_curve = [
                p
                for p in pts
                if abs(curve.poly.evaluate_complex(dict(zip(names, p)))) < 1e-8
            ]
            distinct = {tuple(np.round(np.array(p) / p[0], 6)) for p in on_curve}
            counts.append(len(distinct))
            break
    if not counts:
        raise RuntimeError("could not sample curve points for the fiber check")
    values = set(counts)
    if len(values) != 1:
        raise ArithmeticError(f"fiber cardinality is not generic: {sorted(values)}")
    return counts[0]


def _univariate_in(p: MultiPoly, name: str, numeric_values: dict) -> np.ndarray:
    d = p.degree_in(name)
    out = np.zeros(d + 1, dtype=complex)
    idx = p.variables.index(name)
    for exp, coef in p.terms.items():
        val = coef.to_complex()
        for vname, v in numeric_values.items():
            val *= complex(v) ** exp[p.variables.index(vname)]
        out[exp[idx]] += val
    return out


def verify_second_cover(l4: Fraction, l0_sign: int = +1) -> dict:
    """Q2tilde(map(x,y,z)) must be divisible by Q2 (the birational step)."""
    q2 = curve_q2(l4, l0_sign)
    q2t = curve_q2_tilde(l4, l0_sign)
    l0 = lambda0(l0_sign)
    V = ("x", "y", "z")
    x = MultiPoly.var(V, "x")
    y = MultiPoly.var(V, "y")
    z = MultiPoly.var(V, "z")
    core = x * x + l0 * y * y
    phi1 = x * core
    phi2 = y * core
    phi3 = (y * core * FieldElement(l4) + (y * y - x * x) * z * 2) * (-I)
    pulled = q2t.poly.rename(V, {"x1": "x", "y1": "y", "z1": "z"}).substitute({"x": phi1, "y": phi2, "z": phi3})
    quotient = exact_divide(pulled, q2.poly)
    ok = not isinstance(quotient, NotDivisible)
    return {"pullback_divisible": ok, "cofactor": quotient if ok else None}


# ----------------------------------------------------------------------
# Jonquieres normal form of the quartic cone's plane section
# ----------------------------------------------------------------------
JON_VARS = ("x1", "y1", "x", "y")


def _affine_cone_section(eps1: Fraction, eps2: Fraction) -> MultiPoly:
    """S2 in the chart bb = 1 with a = x, b = y (a quadratic in x)."""
    s2 = surface_s2(eps1, eps2).poly
    sec = s2.evaluate({"bb": FieldElement(1)})
    return sec.rename(JON_VARS, {"a": "x", "b": "y", "c": "y"})  # c is absent anyway


def jonquieres_parameters(eps1: Fraction, eps2: Fraction) -> FieldElement:
    """The y1^2 coefficient of the normal form x1^2 = y1^4 + P*y1^2 + 1."""
    e1, e2 = Fraction(eps1), Fraction(eps2)
    if 1 - e1 * e2 == 0:
        raise DegenerateParameters("1 - eps1*eps2 = 0: singular normalization")
    num = (
        8
        + e1**4
        - 2 * e1**3 * e2
        + 4 * e2**2
        + e2**4
        - 2 * e1 * e2 * (4 + e2 * e2)
        + e1 * e1 * (4 + 3 * e2 * e2)
    )
    return FieldElement(Fraction(num, 4 * (1 - e1 * e2)))


def discriminant_poly() -> MultiPoly:
    """The biquadratic discriminant as a polynomial in (eps1, eps2)."""
    E = ("e1", "e2")
    e1 = MultiPoly.var(E, "e1")
    e2 = MultiPoly.var(E, "e2")
    bracket = (
        MultiPoly.constant(E, 8)
        + e1**4
        - 2 * e1**3 * e2
        + 4 * e2**2
        + e2**4
        - 2 * e1 * e2 * (4 + e2**2)
        + e1**2 * (4 + 3 * e2**2)
    )
    one_minus = MultiPoly.constant(E, 1) - e1 * e2
    return bracket * bracket - 64 * one_minus * one_minus


def submanifold_polys() -> Tuple[MultiPoly, MultiPoly, MultiPoly]:
    E = ("e1", "e2")
    e1 = MultiPoly.var(E, "e1")
    e2 = MultiPoly.var(E, "e2")
    mani1a = MultiPoly.constant(E, 4) - 2 * e1 + e1**2 - 2 * e2 - e1 * e2 + e2**2
    mani1b = MultiPoly.constant(E, 4) + 2 * e1 + e1**2 + 2 * e2 - e1 * e2 + e2**2
    mani3 = 4 * e1**2 + e1**4 - 2 * e1**3 * e2 + 4 * e2**2 + 3 * e1**2 * e2**2 - 2 * e1 * e2**3 + e2**4
    return mani1a, mani1b, mani3


def jonquieres_normal_form(eps1: Fraction, eps2: Fraction) -> dict:
    """Bring the cone section to x1^2 = y1^4 + P y1^2 + 1 and certify it.

    Requires eps1*eps2 - 1 to be a rational square so that
    sqrt(1 - eps1*eps2) = i*r stays inside Q(zeta_12).
    """
    from ..params import is_rational_square

    e1, e2 = Fraction(eps1), Fraction(eps2)
    if 1 - e1 * e2 == 0:
        raise DegenerateParameters("1 - eps1*eps2 = 0: singular normalization")
    r = is_rational_square(e1 * e2 - 1)
    if r is None:
        raise ValueError("exact Jonquieres run needs eps1*eps2 - 1 to be a rational square")
    sqrt_one_minus = I * FieldElement(r)  # sqrt(1 - e1*e2) for e1*e2 > 1

    section = _affine_cone_section(e1, e2)
    V = JON_VARS
    y1 = MultiPoly.var(V, "y1")
    x1 = MultiPoly.var(V, "x1")
    quad = MultiPoly.constant(V, FieldElement(e1 * e1)) - FieldElement(e2 * e2) * y1 * y1
    r1 = 4 * I * FieldElement(e2) * sqrt_one_minus * quad * y1
    r2 = (
        2
        * I
        * quad
        * (
            MultiPoly.constant(V, FieldElement(2 * e1))
            - FieldElement(e1 * e1 * e2 + e2**3 - 2 * e1 - e1 * e2 * e2) * y1 * y1
        )
    )
    r3 = 4 * I * quad * quad
    # substitute x -> (r1*x1 - r2)/r3, y -> y1 and clear the denominator
    a2 = section.coefficient_of("x", 2).substitute({"y": y1})
    a1 = section.coefficient_of("x", 1).substitute({"y": y1})
    a0 = section.coefficient_of("x", 0).substitute({"y": y1})
    lin = r1 * x1 - r2
    numerator = a2 * lin * lin + a1 * lin * r3 + a0 * r3 * r3

    P = jonquieres_parameters(e1, e2)
    target = x1 * x1 - y1**4 - P * y1 * y1 - MultiPoly.constant(V, 1)
    quotient = exact_divide(numerator, target)
    normal_form_exact = (not isinstance(quotient, NotDivisible)) and (
        not isinstance(quotient, NotDivisible) and quotient.degree_in("x1") == 0
    )

    # discriminant factors through the three submanifolds exactly
    disc = discriminant_poly()
    m1a, m1b, m3 = submanifold_polys()
    q = exact_divide(disc, m1a * m1b * m3)
    disc_factors = (not isinstance(q, NotDivisible)) and q.total_degree() == 0

    # Jacobi modulus k = r1/r2 from the biquadratic roots
    pc = P.to_complex()
    roots = np.roots([1.0, pc, 1.0])
    rr1, rr2 = np.sqrt(roots[0] + 0j), np.sqrt(roots[1] + 0j)
    return {
        "normal_form_exact": normal_form_exact,
        "cofactor": quotient if not isinstance(quotient, NotDivisible) else None,
        "P": P,
        "jacobi_modulus": complex(rr1 / rr2),
        "discriminant_factors_exactly": disc_factors,
        "discriminant_value": disc.evaluate({"e1": FieldElement(e1), "e2": FieldElement(e2)}),
    }
