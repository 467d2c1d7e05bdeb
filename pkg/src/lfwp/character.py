"""The canonical additive character of K and the translation map u(n).

The character is trivial on the ring of integers D and nontrivial on B^-1:
chi(x) = exp(2*pi*i * a0 / p) where a0 is the coordinate of 1 in the
coefficient of p^-1 of x.  Character values are carried exactly as an
integer exponent mod p (``UnitComplex``) so that additivity can be checked
without any floating tolerance.

u(n) enumerates coset representatives of D in K: writing n in base q with
digits b_0..b_s, u(n) = sum_i g(b_i) p^-(i+1), where g maps an integer code
to the GF(q) element with those base-p digits as coordinates.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import SpecMismatchError
from .gf import FieldSpec
from .laurent import ExponentWindow, LocalFieldElement, lf_mul


@dataclass(frozen=True)
class UnitComplex:
    """exp(2*pi*i * exponent / p), carried exactly."""

    p: int
    exponent: int

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % self.p)

    def __mul__(self, other: "UnitComplex") -> "UnitComplex":
        if self.p != other.p:
            raise SpecMismatchError("unit complex values over different p")
        return UnitComplex(self.p, self.exponent + other.exponent)

    def conjugate(self) -> "UnitComplex":
        return UnitComplex(self.p, -self.exponent)

    @property
    def is_one(self) -> bool:
        return self.exponent == 0

    def value(self) -> complex:
        if self.exponent == 0:
            return 1.0 + 0.0j
        return cmath.exp(2j * cmath.pi * self.exponent / self.p)


def character(x: LocalFieldElement) -> UnitComplex:
    """chi(x), exactly.  Trivial on D; chi(p^-1) = exp(2*pi*i/p)."""
    a = x.coeff(-1)
    return UnitComplex(x.spec.p, a.coeffs[0])


def character_at(
    y: LocalFieldElement,
    x: LocalFieldElement,
    window: ExponentWindow | None = None,
) -> UnitComplex:
    """chi_y(x) = chi(y*x)."""
    return character(lf_mul(y, x, window=window))


def u_map(
    spec: FieldSpec,
    n: int,
    window: ExponentWindow | None = None,
) -> LocalFieldElement:
    """The n-th coset representative of D; u(0) = 0.

    Satisfies u(r*q^k + s) = u(r)*p^-k + u(s) for 0 <= s <= q^k - 1.
    """
    if n < 0:
        raise ValueError(f"u(n) requires n >= 0, got {n}")
    terms = {}
    i = 0
    while n:
        n, digit = divmod(n, spec.q)
        if digit:
            terms[-(i + 1)] = spec.element(digit)
        i += 1
    result = LocalFieldElement.from_terms(spec, terms)
    if window is not None:
        window.require(result, "u(n)")
    return result
