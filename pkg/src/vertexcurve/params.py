"""Branch parameters for the two families of vertex models.

The *main* branch carries two free parameters (eps1, eps2); the divisor
constants follow from

    lt1 = +-1/sqrt(eps1*eps2 - 1),   lt2 = lt1*eps1,   l3 = lt1*eps2,
    l4  = [l3^2*(l3 - lt2) + lt2*(1 - lt1^2)] / lt1,
    l5  = lt1*(l3 + lt2),            l6 = l6bar = 0,

together with l1 = lt1*sqrt(l0) and l2 = lt2*sqrt(l0), where l0 = exp(+-i*pi/3)
is the sixth root of unity selected by ``l0_sign``.  Exact samples therefore
need eps1*eps2 - 1 to be the square of a rational.

The *special* branch has lt1 = 0, lt2 a primitive twelfth root of unity with
lt2^4 - lt2^2 + 1 = 0, l3 = 1/lt2 and a single free parameter l4.  We fix
lt2 = l0^(-1/2) (so l2 = lt2*sqrt(l0) = 1), the choice under which the closed
weight formulas of the two families take their simplest form; the other three
lt2 values are gauge equivalent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .field import FieldElement, ONE, ZERO, lambda0, sqrt_lambda0

Rat = Union[int, Fraction]


def is_rational_square(q: Fraction) -> Optional[Fraction]:
    """Return sqrt(q) if q is the square of a nonnegative rational, else None."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn = _isqrt_exact(num)
    rd = _isqrt_exact(den)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


def _isqrt_exact(n: int) -> Optional[int]:
    if n < 0:
        return None
    r = int(n**0.5)
    for cand in (r - 1, r, r + 1, r + 2):
        if cand >= 0 and cand * cand == n:
            return cand
    return None


@dataclass(frozen=True)
class BranchSpec:
    """Which family, which lambda0 sign, which sign of the weight d."""

    branch: str  # "main" | "special"
    l0_sign: int = +1
    d_sign: int = +1
    eps1: Optional[Fraction] = None
    eps2: Optional[Fraction] = None
    l4: Optional[Fraction] = None

    def __post_init__(self):
        if self.branch not in ("main", "special"):
            raise ValueError(f"unknown branch {self.branch!r}")
        if self.l0_sign not in (+1, -1) or self.d_sign not in (+1, -1):
            raise ValueError("signs must be +1 or -1")
        if self.branch == "main":
            if self.eps1 is None or self.eps2 is None:
                raise ValueError("main branch requires eps1 and eps2")
            if self.eps1 == 0 or self.eps2 == 0:
                raise ValueError("main branch requires eps1 != 0 and eps2 != 0")
            if self.eps1 * self.eps2 == 1:
                raise ValueError("main branch requires eps1*eps2 != 1 (d and J2 degenerate)")
        else:
            if self.l4 is None:
                raise ValueError("special branch requires l4")

    @classmethod
    def main(cls, eps1: Rat, eps2: Rat, l0_sign: int = +1, d_sign: int = +1) -> "BranchSpec":
        return cls("main", l0_sign, d_sign, Fraction(eps1), Fraction(eps2), None)

    @classmethod
    def special(cls, l4: Rat, l0_sign: int = +1, d_sign: int = +1) -> "BranchSpec":
        return cls("special", l0_sign, d_sign, None, None, Fraction(l4))

    # numeric constants -------------------------------------------------
    @property
    def lambda0_c(self) -> complex:
        return lambda0(self.l0_sign).to_complex()

    @property
    def sqrt_lambda0_c(self) -> complex:
        return sqrt_lambda0(self.l0_sign).to_complex()

    def describe(self) -> dict:
        out = {"branch": self.branch, "l0_sign": self.l0_sign, "d_sign": self.d_sign}
        if self.branch == "main":
            out["eps1"] = str(self.eps1)
            out["eps2"] = str(self.eps2)
        else:
            out["l4"] = str(self.l4)
        return out


class ParameterSample:
    """Exact divisor constants for one branch, all living in Q(zeta_12).

    Raises ValueError when the requested main-branch sample cannot be exact,
    i.e. when eps1*eps2 - 1 is not the square of a rational.
    """

    def __init__(self, spec: BranchSpec):
        self.spec = spec
        self.branch = spec.branch
        self.l0 = lambda0(spec.l0_sign)
        self.sqrt_l0 = sqrt_lambda0(spec.l0_sign)
        if spec.branch == "main":
            self.eps1 = FieldElement(spec.eps1)
            self.eps2 = FieldElement(spec.eps2)
            prod = spec.eps1 * spec.eps2 - 1
            root = is_rational_square(prod)
            if root is None or root == 0:
                raise ValueError(
                    f"eps1*eps2 - 1 = {prod} is not a nonzero rational square; "
                    "exact main-branch samples require one"
                )
            self.lt1 = FieldElement(Fraction(spec.d_sign) / root)
            self.lt2 = self.lt1 * self.eps1
            self.l3 = self.lt1 * self.eps2
            self.l4 = (self.l3 * self.l3 * (self.l3 - self.lt2) + self.lt2 * (ONE - self.lt1 * self.lt1)) / self.lt1
            self.l5 = self.lt1 * (self.l3 + self.lt2)
        else:
            self.eps1 = None
            self.eps2 = None
            self.lt1 = ZERO
            self.lt2 = self.sqrt_l0.inverse()
            self.l3 = self.sqrt_l0
            self.l4 = FieldElement(spec.l4)
            self.l5 = ZERO
        self.l1 = self.lt1 * self.sqrt_l0
        self.l2 = self.lt2 * self.sqrt_l0
        self.l6 = ZERO
        self._check()

    def _check(self):
        if self.branch == "main":
            if not (self.l3 * self.lt2 - self.lt1 * self.lt1 - ONE).is_zero():
                raise AssertionError("main-branch constraint l3*lt2 - lt1^2 - 1 = 0 violated")
            res = self.l4 * self.lt1 + self.l3**2 * (self.lt2 - self.l3) - self.lt2 * (ONE - self.lt1**2)
            if not res.is_zero():
                raise AssertionError("main-branch l4 constraint violated")
        else:
            res = self.lt2**4 - self.lt2**2 + ONE
            if not res.is_zero():
                raise AssertionError("special-branch lt2^4 - lt2^2 + 1 = 0 violated")
            if not (self.l3 * self.lt2 - ONE).is_zero():
                raise AssertionError("special-branch l3 = 1/lt2 violated")

    def degeneration_residuals(self) -> dict:
        """Exact values of the three degeneration submanifold equations (main)."""
        if self.branch != "main":
            return {}
        e1, e2 = self.spec.eps1, self.spec.eps2
        mani1a = 4 - 2 * e1 + e1 * e1 - 2 * e2 - e1 * e2 + e2 * e2
        mani1b = 4 + 2 * e1 + e1 * e1 + 2 * e2 - e1 * e2 + e2 * e2
        mani3 = (
            4 * e1**2 + e1**4 - 2 * e1**3 * e2 + 4 * e2**2 + 3 * e1**2 * e2**2 - 2 * e1 * e2**3 + e2**4
        )
        return {"mani1A": mani1a, "mani1B": mani1b, "mani3": mani3}

    def is_generic(self) -> bool:
        return all(v != 0 for v in self.degeneration_residuals().values())


def main_sample_stream(count: int, start: int = 0):
    """Deterministic stream of exact, generic main-branch samples.

    Walks a fixed grid of (eps1, r) rationals with eps1*eps2 - 1 = r^2 and
    alternates the lambda0 and d signs, skipping degenerate combinations.
    """
    eps1_pool = [Fraction(2), Fraction(3), Fraction(1, 2), Fraction(5, 3), Fraction(-2),
                 Fraction(7, 4), Fraction(4), Fraction(-3, 2), Fraction(5), Fraction(8, 5)]
    r_pool = [Fraction(2), Fraction(1), Fraction(3), Fraction(1, 2), Fraction(5, 2),
              Fraction(3, 4), Fraction(4), Fraction(2, 3), Fraction(5), Fraction(7, 2)]
    produced = 0
    index = 0
    k = 0
    while produced < count:
        e1 = eps1_pool[k % len(eps1_pool)]
        r = r_pool[(k // len(eps1_pool)) % len(r_pool)]
        k += 1
        e2 = (1 + r * r) / e1
        l0_sign = +1 if k % 2 else -1
        d_sign = +1 if (k // 2) % 2 else -1
        try:
            sample = ParameterSample(BranchSpec.main(e1, e2, l0_sign, d_sign))
        except ValueError:
            continue
        if not sample.is_generic():
            continue
        if index >= start:
            produced += 1
            yield sample
        index += 1


def special_sample_stream(count: int, l0_sign: int = -1):
    """Deterministic stream of exact special-branch samples (rational l4)."""
    l4_pool = [Fraction(1), Fraction(2), Fraction(-3), Fraction(5, 2), Fraction(-1, 3),
               Fraction(7), Fraction(3, 4), Fraction(-5), Fraction(9, 2), Fraction(11, 5)]
    for j in range(count):
        l4 = l4_pool[j % len(l4_pool)] + (j // len(l4_pool))
        yield ParameterSample(BranchSpec.special(l4, l0_sign))
