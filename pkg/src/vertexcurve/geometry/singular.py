"""Singular loci, multiplicities, blow-ups and the plane-curve genus formula.

The canonical curves mix two kinds of singular points: points whose
coordinates live in Q(zeta_12) (all points on the infinity line, the origins)
and points with algebraic coordinates of higher degree (the affine double
points of the octic and of its quadratic-cover image).  The former are
handled exactly: shifts, tangent cones and blow-ups run over the exact field.
The latter are located numerically (companion-matrix roots of an exact
eliminant, then Newton polishing) and classified with tolerances; every such
point in this workbench is an ordinary double point, so no numeric blow-up is
ever required.

Genus bookkeeping follows the standard plane-curve formula

    g = (D-1)(D-2)/2 - sum over singular points (including all infinitely
        near ones discovered by recursive blow-up) of m(m-1)/2.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ..field import FieldElement, ONE, lambda0
from ..poly import MultiPoly, exact_divide, NotDivisible, resultant
from .canonical import ProjectiveCurve, ProjectiveSurface

Complex3 = Tuple[complex, complex, complex]


@dataclass
class SingularPointRecord:
    point: Tuple  # three coordinates, FieldElement (exact) or complex (numeric)
    exact: bool
    multiplicity: int
    ordinary: bool
    tangent_count: int
    infinitely_near: List[int] = dc_field(default_factory=list)
    residual: float = 0.0
    note: str = ""

    def point_complex(self) -> Complex3:
        return tuple(p.to_complex() if isinstance(p, FieldElement) else complex(p) for p in self.point)

    def deduction(self) -> Fraction:
        total = Fraction(self.multiplicity * (self.multiplicity - 1), 2)
        for m in self.infinitely_near:
            total += Fraction(m * (m - 1), 2)
        return total


@dataclass
class GenusReport:
    label: str
    degree: int
    arithmetic_genus: Fraction
    records: List[SingularPointRecord]
    genus: int

    def deductions(self) -> List[Fraction]:
        return [r.deduction() for r in self.records]


class PositiveDimensionalSingularLocus(RuntimeError):
    pass


# ----------------------------------------------------------------------
# small univariate helpers over the exact field
# ----------------------------------------------------------------------
def _uni_trim(coeffs: List[FieldElement]) -> List[FieldElement]:
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def _uni_deriv(coeffs: List[FieldElement]) -> List[FieldElement]:
    return _uni_trim([coeffs[k] * k for k in range(1, len(coeffs))])


def _uni_mod(a: List[FieldElement], b: List[FieldElement]) -> List[FieldElement]:
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    inv = lead.inverse()
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        factor = a[-1] * inv
        for i in range(db + 1):
            a[shift + i] = a[shift + i] - factor * b[i]
        a = _uni_trim(a)
        if not a:
            break
    return a


def _uni_gcd(a: List[FieldElement], b: List[FieldElement]) -> List[FieldElement]:
    a, b = _uni_trim(list(a)), _uni_trim(list(b))
    while b:
        a, b = b, _uni_mod(a, b)
    if a:
        inv = a[-1].inverse()
        a = [c * inv for c in a]
    return a


# ----------------------------------------------------------------------
# tangent cones
# ----------------------------------------------------------------------
def _affine_chart(curve_poly: MultiPoly, chart: str) -> Tuple[MultiPoly, Tuple[str, str]]:
    """Dehomogenize; returns the affine polynomial and its two live variables."""
    names = curve_poly.variables
    keep = tuple(n for n in names if n != chart)
    return curve_poly.evaluate({chart: ONE}), keep


def _shift_to_origin(f: MultiPoly, uv: Tuple[str, str], p0, p1) -> MultiPoly:
    reps = {}
    for name, val in zip(uv, (p0, p1)):
        reps[name] = MultiPoly.var(f.variables, name) + MultiPoly.constant(f.variables, val)
    return f.substitute(reps)


def _lowest_form(f: MultiPoly, uv: Tuple[str, str]) -> Tuple[int, MultiPoly]:
    iu = f.variables.index(uv[0])
    iv = f.variables.index(uv[1])
    m = min(exp[iu] + exp[iv] for exp in f.terms)
    form = {exp: c for exp, c in f.terms.items() if exp[iu] + exp[iv] == m}
    return m, MultiPoly(f.variables, form)


def _form_as_univariate(form: MultiPoly, uv: Tuple[str, str], m: int) -> List[FieldElement]:
    """Coefficients of t^j in form(u = t, v = 1) where direction is v = t*u...

    Convention: the direction parameter t satisfies u = t * v; the coefficient
    of t^j collects the u^j v^(m-j) monomial.  A root t0 gives the tangent
    line u = t0 * v; a degree drop below m signals the extra direction v = 0.
    """
    iu = form.variables.index(uv[0])
    iv = form.variables.index(uv[1])
    coeffs = [FieldElement(0)] * (m + 1)
    for exp, c in form.terms.items():
        coeffs[exp[iu]] = coeffs[exp[iu]] + c
    return _uni_trim(coeffs)


def _tangent_structure_exact(form: MultiPoly, uv: Tuple[str, str], m: int):
    """Distinct-direction count and repeated directions of an exact m-form.

    Returns (n_distinct, repeated) where repeated is a list of
    ('A', t0, mult) entries for directions u = t0*v and ('B', None, mult) for
    the direction v = 0.
    """
    coeffs = _form_as_univariate(form, uv, m)
    deg = len(coeffs) - 1
    repeated = []
    n_distinct = 0
    v_mult = m - deg  # multiplicity of the direction v = 0
    if v_mult > 0:
        n_distinct += 1
        if v_mult >= 2:
            repeated.append(("B", None, v_mult))
    if deg >= 1:
        sqfree_gcd = _uni_gcd(coeffs, _uni_deriv(coeffs))
        n_repeated_deg = len(sqfree_gcd) - 1
        n_distinct += deg - n_repeated_deg
        # extract each repeated direction exactly; every canonical case has a
        # gcd that collapses to a single linear factor under repeated gcds
        g = sqfree_gcd
        while len(g) - 1 >= 1:
            if len(g) == 2:
                t0 = -(g[0] / g[1])
                mult = _root_multiplicity(coeffs, t0)
                repeated.append(("A", t0, mult))
                break
            g2 = _uni_gcd(g, _uni_deriv(g))
            if len(g2) == len(g):
                raise NotImplementedError(
                    "tangent cone with several conjugate repeated directions; "
                    "not produced by the canonical curves"
                )
            if len(g2) == 1:
                raise NotImplementedError(
                    "tangent cone with multiple distinct repeated directions over the field"
                )
            g = g2
    return n_distinct, repeated


def _root_multiplicity(coeffs: List[FieldElement], t0: FieldElement) -> int:
    mult = 0
    cur = list(coeffs)
    while cur:
        val = FieldElement(0)
        for c in reversed(cur):
            val = val * t0 + c
        if not val.is_zero():
            break
        mult += 1
        # synthetic division by (t - t0)
        out = []
        acc = FieldElement(0)
        for c in reversed(cur):
            acc = c + acc * t0
            out.append(acc)
        cur = _uni_trim(list(reversed(out[:-1]))) if len(out) > 1 else []
    return mult


# ----------------------------------------------------------------------
# classification
# ----------------------------------------------------------------------
def classify_singularity(curve: ProjectiveCurve, point: Sequence, exact: Optional[bool] = None) -> SingularPointRecord:
    """Multiplicity and ordinariness of a singular point of ``curve``.

    ``point`` holds three projective coordinates, either FieldElements (exact
    classification) or complex numbers (tolerance-based classification).
    """
    if exact is None:
        exact = all(isinstance(x, FieldElement) for x in point)
    if exact:
        return _classify_exact(curve, tuple(point))
    return _classify_numeric(curve, tuple(complex(x) for x in point))


def _pick_chart(point, names) -> int:
    if all(isinstance(x, FieldElement) for x in point):
        for idx in (2, 1, 0):
            if not point[idx].is_zero():
                return idx
    else:
        mags = [abs(complex(x)) for x in point]
        return int(np.argmax(mags))
    raise ValueError("zero projective point")


def _classify_exact(curve: ProjectiveCurve, point) -> SingularPointRecord:
    names = curve.poly.variables
    chart_idx = _pick_chart(point, names)
    chart = names[chart_idx]
    scale = point[chart_idx]
    pt = tuple(x / scale for x in point)
    if curve.poly.evaluate({names[i]: pt[i] for i in range(3)}) != 0:
        raise ValueError("point does not lie on the curve")
    f, uv = _affine_chart(curve.poly, chart)
    coords = [pt[names.index(u)] for u in uv]
    g = _shift_to_origin(f, uv, coords[0], coords[1])
    if g.is_zero():
        raise PositiveDimensionalSingularLocus("curve vanishes identically near the point")
    m, form = _lowest_form(g, uv)
    if m < 2:
        raise ValueError("point is not singular")
    n_distinct, repeated = _tangent_structure_exact(form, uv, m)
    return SingularPointRecord(
        point=tuple(pt),
        exact=True,
        multiplicity=m,
        ordinary=(n_distinct == m),
        tangent_count=n_distinct,
        residual=0.0,
        note=f"chart {chart}",
    )


def _classify_numeric(curve: ProjectiveCurve, point: Complex3) -> SingularPointRecord:
    names = curve.poly.variables
    chart_idx = _pick_chart(point, names)
    chart = names[chart_idx]
    pt = tuple(x / point[chart_idx] for x in point)
    f, uv = _affine_chart(curve.poly, chart)
    mat = _coeff_matrix(f, uv)
    u0 = pt[names.index(uv[0])]
    v0 = pt[names.index(uv[1])]
    shifted = _shift_matrix(mat, u0, v0)
    scale = np.abs(shifted).max()
    tol = 1e-8 * max(scale, 1.0)
    m = 0
    d = shifted.shape[0] - 1
    for total in range(0, 2 * d + 1):
        band = [abs(shifted[i, j]) for i in range(d + 1) for j in range(d + 1) if i + j == total]
        if band and max(band) > tol:
            m = total
            break
    if m < 2:
        raise ValueError(f"point is not singular numerically (multiplicity {m})")
    form = [shifted[j, m - j] if j <= d and m - j <= d else 0.0 for j in range(m + 1)]
    n_distinct = _distinct_directions_numeric(form, m)
    fval = abs(_eval_matrix(shifted, 0.0, 0.0))
    return SingularPointRecord(
        point=pt,
        exact=False,
        multiplicity=m,
        ordinary=(n_distinct == m),
        tangent_count=n_distinct,
        residual=float(fval / max(scale, 1.0)),
        note=f"chart {chart}",
    )


def _distinct_directions_numeric(form_coeffs, m: int, tol: float = 1e-6) -> int:
    arr = np.array(form_coeffs, dtype=complex)
    scale = np.abs(arr).max()
    arr = arr / scale
    deg = m
    while deg > 0 and abs(arr[deg]) < 1e-9:
        deg -= 1
    count = 1 if deg < m else 0  # direction v = 0 when the top coefficient dies
    if deg >= 1:
        roots = np.roots(arr[: deg + 1][::-1])
        used = []
        for r in roots:
            if not any(abs(r - u) <= tol * max(1.0, abs(u)) for u in used):
                used.append(r)
        count += len(used)
    return count


# ----------------------------------------------------------------------
# numeric coefficient matrices for bivariate work
# ----------------------------------------------------------------------
def _coeff_matrix(f: MultiPoly, uv: Tuple[str, str]) -> np.ndarray:
    iu = f.variables.index(uv[0])
    iv = f.variables.index(uv[1])
    d = max(max(exp[iu], exp[iv]) for exp in f.terms) if f.terms else 0
    d = max(d, max((exp[iu] + exp[iv]) for exp in f.terms) if f.terms else 0)
    out = np.zeros((d + 1, d + 1), dtype=complex)
    for exp, coef in f.terms.items():
        out[exp[iu], exp[iv]] += coef.to_complex()
    return out


def _shift_matrix(mat: np.ndarray, u0: complex, v0: complex) -> np.ndarray:
    n = mat.shape[0]
    binom = np.zeros((n, n))
    for i in range(n):
        binom[i, 0] = 1.0
        for j in range(1, i + 1):
            binom[i, j] = binom[i - 1, j - 1] + (binom[i - 1, j] if j <= i - 1 else 0.0)
    out = np.zeros_like(mat)
    for i in range(n):
        for k in range(i + 1):
            out[k, :] += mat[i, :] * binom[i, k] * (u0 ** (i - k))
    out2 = np.zeros_like(mat)
    for j in range(n):
        for k in range(j + 1):
            out2[:, k] += out[:, j] * binom[j, k] * (v0 ** (j - k))
    return out2


def _eval_matrix(mat: np.ndarray, u: complex, v: complex) -> complex:
    n = mat.shape[0]
    total = 0j
    for i in range(n):
        for j in range(n):
            if mat[i, j] != 0:
                total += mat[i, j] * (u**i) * (v**j)
    return total


# ----------------------------------------------------------------------
# numeric affine singular points (generic engine)
# ----------------------------------------------------------------------
def _numeric_resultant_roots(g1: MultiPoly, g2: MultiPoly, uv: Tuple[str, str]) -> np.ndarray:
    """Roots in uv[0] of res_{uv[1]}(g1, g2), via evaluation/interpolation."""
    u, v = uv
    d1u, d1v = max(g1.degree_in(u), 0), max(g1.degree_in(v), 0)
    d2u, d2v = max(g2.degree_in(u), 0), max(g2.degree_in(v), 0)
    deg_bound = d1u * d2v + d2u * d1v + 1
    npts = max(2 * deg_bound + 1, 8)
    thetas = 2.0 * np.pi * np.arange(npts) / npts
    radius = 1.37
    samples = radius * np.exp(1j * thetas)
    dets = np.zeros(npts, dtype=complex)
    m1 = _coeff_matrix(g1, uv)
    m2 = _coeff_matrix(g2, uv)
    for k, s in enumerate(samples):
        p1 = _uni_slice(m1, s, d1v)
        p2 = _uni_slice(m2, s, d2v)
        dets[k] = _sylvester_det_fixed(p1, d1v, p2, d2v)
    # FFT-free interpolation on the roots-of-unity circle
    coeffs = np.fft.fft(dets) / npts
    powers = radius ** np.arange(npts)
    coeffs = coeffs / powers
    coeffs = coeffs[: deg_bound + 1]
    mags = np.abs(coeffs)
    if mags.max() == 0.0:
        raise PositiveDimensionalSingularLocus("resultant of the gradient system vanishes identically")
    top = len(coeffs) - 1
    while top > 0 and mags[top] < 1e-10 * mags.max():
        top -= 1
    if top == 0:
        return np.array([], dtype=complex)
    return np.roots(coeffs[: top + 1][::-1])


def _uni_slice(mat: np.ndarray, uval: complex, dv: int) -> np.ndarray:
    n = mat.shape[0]
    upow = uval ** np.arange(n)
    return (mat * upow[:, None]).sum(axis=0)[: dv + 1]


def _sylvester_det_fixed(p: np.ndarray, dp: int, q: np.ndarray, dq: int) -> complex:
    """Sylvester determinant at fixed structural degrees dp, dq.

    Fixed sizes keep the sampled determinants consistent with one single
    polynomial in the eliminated variable, which the interpolation needs.
    """
    n = dp + dq
    if n == 0:
        return 1.0
    m = np.zeros((n, n), dtype=complex)
    for r in range(dq):
        m[r, r : r + dp + 1] = p[: dp + 1][::-1]
    for r in range(dp):
        m[dq + r, r : r + dq + 1] = q[: dq + 1][::-1]
    return np.linalg.det(m)


def affine_singular_points_numeric(curve: ProjectiveCurve, chart: str = "c", tol: float = 1e-10) -> List[Tuple[complex, complex]]:
    """All affine singular points in the given chart, Newton-polished."""
    names = curve.poly.variables
    f, uv = _affine_chart(curve.poly, chart)
    g1 = f.derivative(uv[0])
    g2 = f.derivative(uv[1])
    roots_u = _numeric_resultant_roots(g1, g2, uv)
    m1 = _coeff_matrix(g1, uv)
    m2 = _coeff_matrix(g2, uv)
    mf = _coeff_matrix(f, uv)
    h11 = _matrix_derivative(m1, 0)
    h12 = _matrix_derivative(m1, 1)
    h22 = _matrix_derivative(m2, 1)
    hessian_scale = max(np.abs(h11).max(), np.abs(h12).max(), np.abs(h22).max(), 1.0)
    found: List[Tuple[complex, complex]] = []
    for u0 in roots_u:
        p1 = _uni_slice(m1, u0, m1.shape[1] - 1)
        top = len(p1) - 1
        biggest = np.abs(p1).max()
        if biggest == 0.0:
            continue
        while top > 0 and abs(p1[top]) < 1e-12 * biggest:
            top -= 1
        if top < 1:
            continue
        for v0 in np.roots(p1[: top + 1][::-1]):
            u, v = _newton_polish(m1, m2, u0, v0)
            scale = max(np.abs(mf).max(), 1.0)
            res = max(abs(_eval_matrix(m1, u, v)), abs(_eval_matrix(m2, u, v)), abs(_eval_matrix(mf, u, v)))
            if res >= tol * scale:
                continue
            # reject smeared root clusters around higher-multiplicity centers:
            # genuine nodes have a Hessian of f that is neither tiny against
            # the coefficient scale nor nearly singular
            a11 = _eval_matrix(h11, u, v)
            a12 = _eval_matrix(h12, u, v)
            a22 = _eval_matrix(h22, u, v)
            hnorm = max(abs(a11), abs(a12), abs(a22))
            det_h = a11 * a22 - a12 * a12
            if hnorm < 1e-5 * hessian_scale or abs(det_h) < 1e-8 * hnorm * hnorm:
                continue
            if not any(abs(u - a) + abs(v - b) < 1e-6 for a, b in found):
                found.append((u, v))
    return found


def _newton_polish(m1: np.ndarray, m2: np.ndarray, u: complex, v: complex, steps: int = 40):
    d1u = _matrix_derivative(m1, 0)
    d1v = _matrix_derivative(m1, 1)
    d2u = _matrix_derivative(m2, 0)
    d2v = _matrix_derivative(m2, 1)
    for _ in range(steps):
        f1 = _eval_matrix(m1, u, v)
        f2 = _eval_matrix(m2, u, v)
        j11 = _eval_matrix(d1u, u, v)
        j12 = _eval_matrix(d1v, u, v)
        j21 = _eval_matrix(d2u, u, v)
        j22 = _eval_matrix(d2v, u, v)
        det = j11 * j22 - j12 * j21
        if abs(det) < 1e-14:
            break
        du = (f1 * j22 - f2 * j12) / det
        dv = (j11 * f2 - j21 * f1) / det
        u, v = u - du, v - dv
        if abs(du) + abs(dv) < 1e-16 * (1 + abs(u) + abs(v)):
            break
    return u, v


def _matrix_derivative(mat: np.ndarray, axis: int) -> np.ndarray:
    n = mat.shape[0]
    out = np.zeros_like(mat)
    if axis == 0:
        for i in range(1, n):
            out[i - 1, :] += i * mat[i, :]
    else:
        for j in range(1, n):
            out[:, j - 1] += j * mat[:, j]
    return out


# ----------------------------------------------------------------------
# census of singular points
# ----------------------------------------------------------------------
def _infinity_candidates_exact(curve: ProjectiveCurve) -> List[Tuple[FieldElement, FieldElement, FieldElement]]:
    """Exact candidates [a0 : 1 : 0] among the field points the curves use."""
    zeta2 = lambda0(+1)                     # exp(i pi/3)
    candidates = [
        zeta2, -zeta2,                      # +-exp(i pi/3)
        zeta2 - 1, 1 - zeta2,               # +-exp(2 i pi/3)
        lambda0(+1).inverse(), -(lambda0(+1).inverse()),
        lambda0(-1).inverse(), -(lambda0(-1).inverse()),
    ]
    seen = set()
    out = []
    for a0 in candidates:
        key = a0.c
        if key in seen:
            continue
        seen.add(key)
        out.append((a0, ONE, FieldElement(0)))
    return out


def _is_exact_projective_singular(curve: ProjectiveCurve, point) -> bool:
    names = curve.poly.variables
    vals = {names[i]: point[i] for i in range(3)}
    if not curve.poly.evaluate(vals).is_zero():
        return False
    return all(curve.poly.derivative(n).evaluate(vals).is_zero() for n in names)


def singular_locus_curve(curve: ProjectiveCurve, eps: Optional[Tuple[Fraction, Fraction]] = None) -> List[SingularPointRecord]:
    """Complete singular locus of a plane curve over C.

    Affine points come from the numeric gradient eliminant (for the octic the
    closed-form eliminant route is used instead when ``eps`` is supplied);
    infinity points are found exactly whenever their coordinates lie in
    Q(zeta_12), otherwise numerically from the degree form.
    """
    records: List[SingularPointRecord] = []
    names = curve.poly.variables

    # --- affine part ---------------------------------------------------
    if curve.label == "C1" and eps is not None:
        pts = c1_affine_singular_points(curve, eps[0], eps[1])
    else:
        pts = affine_singular_points_numeric(curve, names[2])
    origin = (FieldElement(0), FieldElement(0), ONE)
    origin_singular = _is_exact_projective_singular(curve, origin)
    for u0, v0 in pts:
        if origin_singular and abs(u0) + abs(v0) < 1e-8:
            continue  # replaced by the exact record below
        records.append(_classify_numeric(curve, (u0, v0, 1.0)))

    # --- infinity part -------------------------------------------------
    found_inf = []
    for cand in _infinity_candidates_exact(curve):
        if _is_exact_projective_singular(curve, cand):
            records.append(_classify_exact(curve, cand))
            found_inf.append(cand[0].to_complex())
    # [0:1:0] and [1:0:0] corner cases, exactly
    for corner in ((FieldElement(0), ONE, FieldElement(0)), (ONE, FieldElement(0), FieldElement(0))):
        if _is_exact_projective_singular(curve, corner):
            records.append(_classify_exact(curve, corner))
    # the affine origin is handled exactly (numeric duplicates were dropped)
    if origin_singular:
        records.append(_classify_exact(curve, origin))
    # numeric sweep of the degree form for anything not in the field
    degree_form = curve.poly.coefficient_of(names[2], 0)
    if not degree_form.is_zero():
        coeffs = [degree_form.coefficient_of(names[0], k) for k in range(curve.degree + 1)]
        arr = np.array([
            (c.terms.get((0,) * 3, FieldElement(0))).to_complex() if c.terms else 0.0
            for c in coeffs
        ])
        arr = np.trim_zeros(arr, "b")
        if len(arr) > 1:
            for a0 in np.roots(arr[::-1]):
                if any(abs(a0 - z) < 1e-6 for z in found_inf):
                    continue
                grad_res = _numeric_gradient_residual(curve, (a0, 1.0, 0.0))
                if grad_res < 1e-8:
                    records.append(_classify_numeric(curve, (a0, 1.0, 0.0)))
                    found_inf.append(a0)
    return records


def _numeric_gradient_residual(curve: ProjectiveCurve, point: Complex3) -> float:
    names = curve.poly.variables
    vals = {names[i]: point[i] for i in range(3)}
    scale = max(1.0, max(abs(c.to_complex()) for c in curve.poly.terms.values()))
    worst = abs(curve.poly.evaluate_complex(vals))
    for n in names:
        worst = max(worst, abs(curve.poly.derivative(n).evaluate_complex(vals)))
    return worst / scale


# ----------------------------------------------------------------------
# the octic's affine singular points via the closed-form eliminant
# ----------------------------------------------------------------------
def c1_eliminant_constants(eps1: Fraction, eps2: Fraction) -> Tuple[Fraction, Fraction, Fraction]:
    e1, e2 = Fraction(eps1), Fraction(eps2)
    a1 = 4 + e2 * (2 * e2 + e1 * e1 * e2 + e2**3 - e1 * (4 + e2 * e2))
    a2 = (
        -16
        + 24 * e1 * e2
        - 4 * (1 + 3 * e1 * e1) * e2**2
        + 2 * e1 * (2 + e1 * e1) * e2**3
        - (4 + e1 * e1) * e2**4
        + 2 * e1 * e2**5
        + e2**6
    )
    a3 = (
        -32
        + 64 * e1 * e2
        - 8 * (7 + 6 * e1 * e1) * e2**2
        + 4 * e1 * (21 + 4 * e1 * e1) * e2**3
        - 2 * (24 + 21 * e1 * e1 + e1**4) * e2**4
        + e1 * (48 + 7 * e1 * e1) * e2**5
        - 2 * (11 + 6 * e1 * e1) * e2**6
        + 11 * e1 * e2**7
        - 5 * e2**8
    )
    return a1, a2, a3


def c1_affine_singular_points(curve: ProjectiveCurve, eps1: Fraction, eps2: Fraction) -> List[Tuple[complex, complex]]:
    """The eight affine double points of the octic from the b-eliminant.

    The gradient system reduces to a degree-eight polynomial in the b
    coordinate whose nonzero roots pair with a closed-form expression for a.
    """
    a1, a2, a3 = c1_eliminant_constants(eps1, eps2)
    e1, e2 = Fraction(eps1), Fraction(eps2)
    # quadratic in B = b^4:  -a1^2 B^2 + [a2 - e2^2 (4 a1 + e2^4)] B + e2^4 = 0
    A = -float(a1 * a1)
    Bc = float(a2 - e2 * e2 * (4 * a1 + e2**4))
    C = float(e2**4)
    disc = np.sqrt(complex(Bc * Bc - 4 * A * C))
    b4_roots = [(-Bc + disc) / (2 * A), (-Bc - disc) / (2 * A)]
    denom = float(a1 + e2 * e2 * (2 - e2 * (e1 - e2)))
    factor2 = float(e2 * (e1 - e2) - 2) * float(a1 * a1)
    points: List[Tuple[complex, complex]] = []
    f, uv = _affine_chart(curve.poly, "c")
    m1 = _coeff_matrix(f.derivative(uv[0]), uv)
    m2 = _coeff_matrix(f.derivative(uv[1]), uv)
    for B in b4_roots:
        for k in range(4):
            b = B ** 0.25 * np.exp(2j * np.pi * k / 4) if B != 0 else 0.0
            if abs(b) < 1e-12:
                continue
            a = (b / float(e2)) ** 3 * (float(a3) + factor2 * b**4) / denom
            a, b = _newton_polish(m1, m2, a, b)
            points.append((a, b))
    return points


# ----------------------------------------------------------------------
# blow-ups
# ----------------------------------------------------------------------
def blow_up_strict_transform(f: MultiPoly, uv: Tuple[str, str], multiplicity: int):
    """Strict transforms of an affine curve singular at the origin.

    Returns (keep_u, keep_v).  The keep-u chart substitutes v -> u*v and
    divides by u^m (exceptional line u = 0; it sees the tangent direction
    v = 0).  The keep-v chart substitutes u -> u*v and divides by v^m
    (exceptional line v = 0; a tangent direction u = t0*v appears there at
    the point (u, v) = (t0, 0)).
    """
    u, v = uv
    m, _ = _lowest_form(f, uv)
    if m < 1:
        raise ValueError("blow-up at a point not on the curve")
    if multiplicity != m:
        raise ValueError(f"declared multiplicity {multiplicity} but lowest form has degree {m}")
    uvar = MultiPoly.var(f.variables, u)
    vvar = MultiPoly.var(f.variables, v)
    total_keep_u = f.substitute({v: uvar * vvar})
    strict_keep_u = exact_divide(total_keep_u, uvar**m)
    total_keep_v = f.substitute({u: uvar * vvar})
    strict_keep_v = exact_divide(total_keep_v, vvar**m)
    if isinstance(strict_keep_u, NotDivisible) or isinstance(strict_keep_v, NotDivisible):
        raise ArithmeticError("exceptional factor did not divide the total transform")
    return strict_keep_u, strict_keep_v


def _resolve_exact(f: MultiPoly, uv: Tuple[str, str], depth: int, cap: int = 4) -> List[int]:
    """Multiplicities of all infinitely-near singular points above the origin."""
    if depth > cap:
        raise RuntimeError("blow-up recursion exceeded its depth cap")
    m, form = _lowest_form(f, uv)
    if m < 2:
        return []
    n_distinct, repeated = _tangent_structure_exact(form, uv, m)
    out: List[int] = []
    if n_distinct == m:
        return out  # ordinary: resolved in one blow-up, nothing infinitely near
    strict_keep_u, strict_keep_v = blow_up_strict_transform(f, uv, m)
    for kind, t0, _mult in repeated:
        if kind == "A":  # tangent direction u = t0*v lives in the keep-v chart
            g = _shift_to_origin(strict_keep_v, uv, t0, FieldElement(0))
        else:  # tangent direction v = 0 lives at the origin of the keep-u chart
            g = strict_keep_u
        m2, _ = _lowest_form(g, uv)
        if m2 >= 2:
            out.append(m2)
            out.extend(_resolve_exact(g, uv, depth + 1, cap))
    return out


def resolve_infinitely_near(curve: ProjectiveCurve, record: SingularPointRecord) -> SingularPointRecord:
    """Fill in the infinitely-near multiplicities of a non-ordinary point."""
    if record.ordinary:
        record.infinitely_near = []
        return record
    if not record.exact:
        raise NotImplementedError("numeric blow-up is not supported (and never needed here)")
    names = curve.poly.variables
    chart_idx = _pick_chart(record.point, names)
    chart = names[chart_idx]
    scale = record.point[chart_idx]
    pt = tuple(x / scale for x in record.point)
    f, uv = _affine_chart(curve.poly, chart)
    coords = [pt[names.index(w)] for w in uv]
    g = _shift_to_origin(f, uv, coords[0], coords[1])
    record.infinitely_near = _resolve_exact(g, uv, depth=1)
    return record


# ----------------------------------------------------------------------
# genus
# ----------------------------------------------------------------------
def genus(curve: ProjectiveCurve, eps: Optional[Tuple[Fraction, Fraction]] = None) -> GenusReport:
    records = singular_locus_curve(curve, eps)
    for rec in records:
        if not rec.ordinary:
            resolve_infinitely_near(curve, rec)
    d = curve.degree
    arithmetic = Fraction((d - 1) * (d - 2), 2)
    total = arithmetic
    for rec in records:
        total -= rec.deduction()
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(
            f"genus computation for {curve.label} gave {total}; "
            "the curve is probably reducible or the census incomplete"
        )
    return GenusReport(curve.label, d, arithmetic, records, int(total))


# ----------------------------------------------------------------------
# surfaces: singular lines of the quartic cone
# ----------------------------------------------------------------------
def surface_singular_lines(surface: ProjectiveSurface, eps1: Fraction) -> dict:
    """Verify the two non-coplanar singular lines of the quartic cone exactly,
    and check numerically that no further singular point exists.

    Lines: l1 = [a:0:0:1] and l2 = [a:0:-eps1*a:1].
    """
    p = surface.poly
    V = p.variables  # (a, b, bb, c)
    line_subs = {
        "l1": MultiPoly.zero(V),
        "l2": MultiPoly.monomial(V, -Fraction(eps1), a=1),
    }
    line_results = {}
    for name, bb_line in line_subs.items():
        ok = True
        for w in V:
            partial = p.derivative(w).evaluate({"b": FieldElement(0)})
            restricted = partial.substitute({"bb": bb_line})
            ok = ok and restricted.is_zero()
        line_results[name] = ok
    # completeness: the cone is singular exactly above the singular points of
    # its plane section; reuse the curve machinery on (a, b, bb)
    section = MultiPoly(("a", "b", "bb"), {(e[0], e[1], e[2]): c for e, c in p.terms.items()})
    curve = ProjectiveCurve(section, surface.degree, "S2_section")
    recs = singular_locus_curve(curve)
    expected = [(1.0, 0.0, 0.0), (1.0, 0.0, -float(eps1))]
    matched = []
    for exp_pt in expected:
        hit = False
        for r in recs:
            pc = r.point_complex()
            norm = np.array(pc) / (pc[0] if abs(pc[0]) > 1e-9 else 1.0)
            if np.allclose(norm, np.array(exp_pt), atol=1e-6):
                hit = True
        matched.append(hit)
    return {
        "l1_exact": line_results["l1"],
        "l2_exact": line_results["l2"],
        "section_singular_count": len(recs),
        "section_matches_lines": all(matched) and len(recs) == 2,
    }
