"""Sparse multivariate polynomials over Q(zeta_12) (or plain rationals).

A polynomial carries an ordered tuple of variable names and a dict mapping
exponent tuples to nonzero FieldElement coefficients.  The zero polynomial is
the empty dict.  Terms are kept exactly; no floating point enters here.

Besides ring arithmetic the module provides the operations the verification
suites are built from:

* ``substitute_powers`` -- the power-substitution engine that repeatedly
  replaces ``var^power`` by a lower-degree expression (optionally with a
  denominator, applied fraction-free), until the degree in ``var`` drops
  below ``power``;
* ``resultant`` -- Sylvester resultant of two polynomials in one variable;
* ``exact_divide`` -- exact multivariate division with a remainder witness;
* ``det_poly`` -- exact determinant of a matrix of polynomials;
* ``partial_gradient`` -- all first partial derivatives.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .field import FieldElement, ONE as F_ONE, ZERO as F_ZERO

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction, FieldElement]


def _as_field(x: Scalar) -> FieldElement:
    if isinstance(x, FieldElement):
        return x
    return FieldElement(x)


class MultiPoly:
    """Sparse polynomial in a fixed ordered set of variables."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping[Exponent, Scalar]] = None):
        self.variables = tuple(variables)
        clean: Dict[Exponent, FieldElement] = {}
        if terms:
            width = len(self.variables)
            for exp, coef in terms.items():
                if len(exp) != width:
                    raise ValueError(f"exponent {exp} does not match arity {width}")
                c = _as_field(coef)
                if not c.is_zero():
                    clean[tuple(exp)] = c
        self.terms = clean

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: Sequence[str], value: Scalar) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def var(cls, variables: Sequence[str], name: str, power: int = 1) -> "MultiPoly":
        idx = tuple(variables).index(name)
        exp = [0] * len(variables)
        exp[idx] = power
        return cls(variables, {tuple(exp): 1})

    @classmethod
    def monomial(cls, variables: Sequence[str], coef: Scalar, **powers: int) -> "MultiPoly":
        exp = [0] * len(variables)
        vars_t = tuple(variables)
        for name, k in powers.items():
            exp[vars_t.index(name)] = k
        return cls(variables, {tuple(exp): coef})

    def _same(self, terms: Dict[Exponent, FieldElement]) -> "MultiPoly":
        p = MultiPoly.__new__(MultiPoly)
        p.variables = self.variables
        p.terms = terms
        return p

    # ------------------------------------------------------------------
    # ring arithmetic
    # ------------------------------------------------------------------
    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch: {other.variables} vs {self.variables}")
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return MultiPoly.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for exp, coef in other.terms.items():
            cur = out.get(exp)
            if cur is None:
                out[exp] = coef
            else:
                s = cur + coef
                if s.is_zero():
                    del out[exp]
                else:
                    out[exp] = s
        return self._same(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return self._same({exp: -coef for exp, coef in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction, FieldElement)):
            c = _as_field(other)
            if c.is_zero():
                return self._same({})
            return self._same({exp: coef * c for exp, coef in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: Dict[Exponent, FieldElement] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                cur = out.get(exp)
                if cur is None:
                    out[exp] = prod
                else:
                    s = cur + prod
                    if s.is_zero():
                        del out[exp]
                    else:
                        out[exp] = s
        return self._same(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # ------------------------------------------------------------------
    # structure
    # ------------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(exp) for exp in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        idx = self.variables.index(name)
        return max(exp[idx] for exp in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(exp) for exp in self.terms}
        return len(degrees) <= 1

    def num_terms(self) -> int:
        return len(self.terms)

    def coefficient_of(self, name: str, power: int) -> "MultiPoly":
        """Coefficient of name^power, as a polynomial with the variable removed (degree 0)."""
        idx = self.variables.index(name)
        out: Dict[Exponent, FieldElement] = {}
        for exp, coef in self.terms.items():
            if exp[idx] == power:
                new = list(exp)
                new[idx] = 0
                out[tuple(new)] = coef
        return self._same(out)

    def leading(self) -> Tuple[Exponent, FieldElement]:
        """Leading term under graded lexicographic order."""
        exp = max(self.terms, key=lambda e: (sum(e), e))
        return exp, self.terms[exp]

    # ------------------------------------------------------------------
    # calculus & substitution
    # ------------------------------------------------------------------
    def derivative(self, name: str) -> "MultiPoly":
        idx = self.variables.index(name)
        out: Dict[Exponent, FieldElement] = {}
        for exp, coef in self.terms.items():
            k = exp[idx]
            if k == 0:
                continue
            new = list(exp)
            new[idx] = k - 1
            key = tuple(new)
            add = coef * k
            cur = out.get(key)
            out[key] = add if cur is None else cur + add
        return self._same({e: c for e, c in out.items() if not c.is_zero()})

    def evaluate(self, values: Mapping[str, Scalar]) -> "MultiPoly":
        """Substitute exact scalars for a subset of the variables."""
        subs = {self.variables.index(k): _as_field(v) for k, v in values.items()}
        out: Dict[Exponent, FieldElement] = {}
        pow_cache: Dict[Tuple[int, int], FieldElement] = {}
        for exp, coef in self.terms.items():
            c = coef
            new = list(exp)
            for idx, val in subs.items():
                k = exp[idx]
                if k:
                    key = (idx, k)
                    p = pow_cache.get(key)
                    if p is None:
                        p = val**k
                        pow_cache[key] = p
                    c = c * p
                new[idx] = 0
            if c.is_zero():
                continue
            key2 = tuple(new)
            cur = out.get(key2)
            if cur is None:
                out[key2] = c
            else:
                s = cur + c
                if s.is_zero():
                    del out[key2]
                else:
                    out[key2] = s
        return self._same(out)

    def evaluate_complex(self, values: Mapping[str, complex]) -> complex:
        """Full numeric evaluation; every variable must receive a value."""
        vals = [complex(values[name]) for name in self.variables]
        total = 0j
        for exp, coef in self.terms.items():
            term = coef.to_complex()
            for v, k in zip(vals, exp):
                if k:
                    term *= v**k
            total += term
        return total

    def substitute(self, replacements: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute polynomials for variables (same variable set in results)."""
        idx_map = {self.variables.index(k): v for k, v in replacements.items()}
        result = MultiPoly.zero(self.variables)
        pow_cache: Dict[Tuple[int, int], MultiPoly] = {}
        for exp, coef in self.terms.items():
            term = MultiPoly.constant(self.variables, coef)
            for i, k in enumerate(exp):
                if k == 0:
                    continue
                if i in idx_map:
                    key = (i, k)
                    p = pow_cache.get(key)
                    if p is None:
                        p = idx_map[i] ** k
                        pow_cache[key] = p
                    term = term * p
                else:
                    mono = [0] * len(self.variables)
                    mono[i] = k
                    term = term * MultiPoly(self.variables, {tuple(mono): 1})
            result = result + term
        return result

    def rename(self, variables: Sequence[str], mapping: Mapping[str, str]) -> "MultiPoly":
        """Re-embed into a new variable tuple, renaming via ``mapping``."""
        new_vars = tuple(variables)
        out: Dict[Exponent, FieldElement] = {}
        for exp, coef in self.terms.items():
            new = [0] * len(new_vars)
            for name, k in zip(self.variables, exp):
                if k == 0:
                    continue
                new[new_vars.index(mapping.get(name, name))] += k
            key = tuple(new)
            cur = out.get(key)
            out[key] = coef if cur is None else cur + coef
        return MultiPoly(new_vars, {e: c for e, c in out.items() if not c.is_zero()})

    # ------------------------------------------------------------------
    # serialization
    # ------------------------------------------------------------------
    def to_string(self) -> str:
        """Canonical text form with graded-lex descending term order."""
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            coef = self.terms[exp]
            factors = [f"({coef!r})"]
            for name, k in zip(self.variables, exp):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            parts.append(" * ".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        n = len(self.terms)
        return f"MultiPoly({n} terms in {'/'.join(self.variables)})"


# ----------------------------------------------------------------------
# power-substitution engine
# ----------------------------------------------------------------------
@dataclass
class RewriteRule:
    """Replace ``var^power`` by ``numerator/denominator`` until the degree in
    ``var`` falls below ``power``.

    The denominator must not involve ``var`` and the numerator must have
    degree in ``var`` strictly below ``power`` so every application lowers the
    top degree.  When a denominator is present the reduction is fraction-free:
    the polynomial is multiplied through by the denominator at each step, so
    the result equals the input modulo the relation
    ``denominator*var^power - numerator`` only up to a nonzero factor
    ``denominator^k``, which is what every zero-test here needs.
    """

    var: str
    power: int
    numerator: MultiPoly
    denominator: Optional[MultiPoly] = None
    max_steps: int = 10_000

    def __post_init__(self):
        if self.power < 1:
            raise ValueError("rewrite power must be >= 1")
        if self.numerator.degree_in(self.var) >= self.power:
            raise ValueError("rewrite does not lower the degree in its target variable")
        if self.denominator is not None and self.denominator.degree_in(self.var) > 0:
            raise ValueError("rewrite denominator must not involve the target variable")


def substitute_powers(p: MultiPoly, rule: RewriteRule) -> MultiPoly:
    """Apply ``rule`` until deg_var(p) < rule.power.  See RewriteRule."""
    idx = p.variables.index(rule.var)
    steps = 0
    while True:
        if not p.terms:
            return p
        top = max(exp[idx] for exp in p.terms)
        if top < rule.power:
            return p
        steps += 1
        if steps > rule.max_steps:
            raise RuntimeError(f"rewrite of {rule.var}^{rule.power} exceeded {rule.max_steps} steps")
        slice_terms: Dict[Exponent, FieldElement] = {}
        rest_terms: Dict[Exponent, FieldElement] = {}
        for exp, coef in p.terms.items():
            if exp[idx] == top:
                new = list(exp)
                new[idx] = top - rule.power
                slice_terms[tuple(new)] = coef
            else:
                rest_terms[exp] = coef
        shifted = p._same(slice_terms)
        rest = p._same(rest_terms)
        if rule.denominator is not None:
            p = rest * rule.denominator + shifted * rule.numerator
        else:
            p = rest + shifted * rule.numerator


# ----------------------------------------------------------------------
# division, resultants, determinants, gradients
# ----------------------------------------------------------------------
class NotDivisible:
    """Witness of failed exact division: the offending remainder."""

    def __init__(self, remainder: MultiPoly):
        self.remainder = remainder

    def __repr__(self):
        return f"NotDivisible(remainder with {self.remainder.num_terms()} terms)"


def exact_divide(f: MultiPoly, g: MultiPoly) -> Union[MultiPoly, NotDivisible]:
    """Return q with f = q*g exactly, or a NotDivisible witness."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return MultiPoly.zero(f.variables)
    if f.variables != g.variables:
        raise ValueError("variable mismatch in exact_divide")
    g_exp, g_coef = g.leading()
    g_coef_inv = g_coef.inverse()
    quotient: Dict[Exponent, FieldElement] = {}
    r = f
    while not r.is_zero():
        r_exp, r_coef = r.leading()
        q_exp = tuple(a - b for a, b in zip(r_exp, g_exp))
        if any(e < 0 for e in q_exp):
            return NotDivisible(r)
        q_coef = r_coef * g_coef_inv
        quotient[q_exp] = q_coef
        r = r - MultiPoly(f.variables, {q_exp: q_coef}) * g
    return MultiPoly(f.variables, quotient)


def resultant(p: MultiPoly, q: MultiPoly, name: str) -> MultiPoly:
    """Sylvester resultant of p and q with respect to ``name``."""
    dp = p.degree_in(name)
    dq = q.degree_in(name)
    if dp <= 0 and dq <= 0:
        raise ValueError(f"neither input has positive degree in {name}")
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of a zero polynomial")
    dp = max(dp, 0)
    dq = max(dq, 0)
    p_coefs = [p.coefficient_of(name, k) for k in range(dp, -1, -1)]
    q_coefs = [q.coefficient_of(name, k) for k in range(dq, -1, -1)]
    n = dp + dq
    zero = MultiPoly.zero(p.variables)
    rows: List[List[MultiPoly]] = []
    for shift in range(dq):
        rows.append([zero] * shift + p_coefs + [zero] * (n - dp - 1 - shift))
    for shift in range(dp):
        rows.append([zero] * shift + q_coefs + [zero] * (n - dq - 1 - shift))
    return det_poly(rows)


def det_poly(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Exact determinant of a square matrix of polynomials.

    Uses minor expansion with memoization on column subsets, which beats
    fraction-free elimination on the sparse matrices that arise here.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("det_poly requires a square matrix")
    if n == 0:
        raise ValueError("empty matrix")
    variables = matrix[0][0].variables
    cache: Dict[Tuple[int, ...], MultiPoly] = {}

    def minor(row: int, cols: Tuple[int, ...]) -> MultiPoly:
        if not cols:
            return MultiPoly.constant(variables, 1)
        cached = cache.get(cols) if row == n - len(cols) else None
        if cached is not None:
            return cached
        acc = MultiPoly.zero(variables)
        for pos, col in enumerate(cols):
            entry = matrix[row][col]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1 :])
            term = entry * sub
            acc = acc + term if pos % 2 == 0 else acc - term
        cache[cols] = acc
        return acc

    return minor(0, tuple(range(n)))


def det_poly_bareiss(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Fraction-free (Bareiss) determinant; reference alternative to det_poly."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("det_poly_bareiss requires a square matrix")
    variables = matrix[0][0].variables
    m = [[entry for entry in row] for row in matrix]
    sign = 1
    prev = MultiPoly.constant(variables, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not m[r][k].is_zero()), None)
            if swap is None:
                return MultiPoly.zero(variables)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q = exact_divide(num, prev)
                if isinstance(q, NotDivisible):
                    raise ArithmeticError("Bareiss division failed; matrix entries not in a domain?")
                m[i][j] = q
        prev = m[k][k]
    result = m[n - 1][n - 1]
    return -result if sign < 0 else result


def partial_gradient(p: MultiPoly) -> List[MultiPoly]:
    """All first partial derivatives, in variable order."""
    return [p.derivative(name) for name in p.variables]
