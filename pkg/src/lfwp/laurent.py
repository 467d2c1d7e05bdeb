"""Truncated Laurent series over GF(q): the local field K at finite precision.

An element is a finite sum sum_k a_k p^k with a_k in GF(q), stored sparsely
as (lowest exponent, coefficient run).  Arithmetic is exact; nothing is ever
silently truncated.  Experiments that fix a global exponent window pass an
``ExponentWindow`` to the operations that could leave it, and get a
``WindowError`` instead of a corrupted value.

The ultrametric absolute value is |x| = q^(-valuation(x)) with |0| = 0,
returned as an exact Fraction.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import ParseError, SpecMismatchError, WindowError
from .gf import FieldSpec, GFElement, coefficient_text

INFINITE_VALUATION = math.inf


@dataclass(frozen=True)
class ExponentWindow:
    """Inclusive exponent range [lo, hi] an experiment allows."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty exponent window [{self.lo}, {self.hi}]")

    def contains(self, x: "LocalFieldElement") -> bool:
        if not x:
            return True
        return x.lo >= self.lo and x.hi <= self.hi

    def require(self, x: "LocalFieldElement", context: str) -> "LocalFieldElement":
        if not self.contains(x):
            raise WindowError(
                f"{context}: support [{x.lo}, {x.hi}] of {x} exceeds "
                f"exponent window [{self.lo}, {self.hi}]"
            )
        return x


class LocalFieldElement:
    """A finite Laurent polynomial in the prime element p over GF(q).

    Normalized: ``coeffs`` is empty for zero, otherwise its first and last
    entries are nonzero and ``lo`` is the valuation.
    """

    __slots__ = ("spec", "lo", "coeffs")

    def __init__(self, spec: FieldSpec, lo: int, coeffs: tuple[GFElement, ...]):
        start = 0
        end = len(coeffs)
        while start < end and not coeffs[start]:
            start += 1
        while end > start and not coeffs[end - 1]:
            end -= 1
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "lo", lo + start if end > start else 0)
        object.__setattr__(self, "coeffs", tuple(coeffs[start:end]))

    def __setattr__(self, name, value):
        raise AttributeError("LocalFieldElement is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, spec: FieldSpec) -> "LocalFieldElement":
        return cls(spec, 0, ())

    @classmethod
    def one(cls, spec: FieldSpec) -> "LocalFieldElement":
        return cls(spec, 0, (spec.one(),))

    @classmethod
    def prime(cls, spec: FieldSpec, k: int = 1) -> "LocalFieldElement":
        """The element p^k."""
        return cls(spec, k, (spec.one(),))

    @classmethod
    def from_terms(cls, spec: FieldSpec, terms: Mapping[int, GFElement | int]) -> "LocalFieldElement":
        if not terms:
            return cls.zero(spec)
        lo = min(terms)
        hi = max(terms)
        coeffs = [spec.zero()] * (hi - lo + 1)
        for k, v in terms.items():
            coeffs[k - lo] = v if isinstance(v, GFElement) else spec.element(v)
        return cls(spec, lo, tuple(coeffs))

    # -- structure ------------------------------------------------------------

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    def coeff(self, k: int) -> GFElement:
        if self.coeffs and self.lo <= k <= self.hi:
            return self.coeffs[k - self.lo]
        return self.spec.zero()

    def terms(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.lo + i, c

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _check(self, other: "LocalFieldElement") -> None:
        if not isinstance(other, LocalFieldElement):
            raise TypeError(f"expected LocalFieldElement, got {type(other).__name__}")
        if self.spec != other.spec:
            raise SpecMismatchError("operands from different field specs")

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "LocalFieldElement") -> "LocalFieldElement":
        self._check(other)
        if not self:
            return other
        if not other:
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        coeffs = tuple(self.coeff(k) + other.coeff(k) for k in range(lo, hi + 1))
        return LocalFieldElement(self.spec, lo, coeffs)

    def __sub__(self, other: "LocalFieldElement") -> "LocalFieldElement":
        return self + (-other)

    def __neg__(self) -> "LocalFieldElement":
        return LocalFieldElement(self.spec, self.lo, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "LocalFieldElement") -> "LocalFieldElement":
        self._check(other)
        if not self or not other:
            return LocalFieldElement.zero(self.spec)
        zero = self.spec.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return LocalFieldElement(self.spec, self.lo + other.lo, tuple(out))

    def shift(self, k: int) -> "LocalFieldElement":
        """Multiply by p^k (exponent shift)."""
        if not self:
            return self
        return LocalFieldElement(self.spec, self.lo + k, self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LocalFieldElement)
            and self.spec == other.spec
            and self.lo == other.lo
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.spec, self.lo, self.coeffs))

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"LocalFieldElement({to_text(self)!r})"


def lf_add(x: LocalFieldElement, y: LocalFieldElement) -> LocalFieldElement:
    return x + y


def lf_mul(
    x: LocalFieldElement,
    y: LocalFieldElement,
    window: ExponentWindow | None = None,
) -> LocalFieldElement:
    """Exact Laurent product; raises WindowError if a window is configured
    and the result's support leaves it."""
    product = x * y
    if window is not None:
        window.require(product, "product")
    return product


def valuation(x: LocalFieldElement) -> int | float:
    """Order of x at the prime element; +inf for zero."""
    return x.lo if x else INFINITE_VALUATION


def absolute_value(x: LocalFieldElement) -> Fraction:
    """|x| = q^(-valuation(x)), exactly; |0| = 0."""
    if not x:
        return Fraction(0)
    return Fraction(x.spec.q) ** (-x.lo)


# -- textual format -----------------------------------------------------------
#
# Elements render as a sparse sum ordered by exponent, one term per nonzero
# coefficient: "p^-2 + e1*p^0 + 2*p^1".  A coefficient of 1 is omitted; a
# multi-monomial GF(q) coefficient is parenthesized: "(1+e1)*p^0".

_TERM_RE = re.compile(r"^(?:(?P<coeff>.+)\*)?p\^(?P<exp>-?\d+)$")
_MONO_RE = re.compile(r"^(?:(?P<scalar>\d+)\*?)?(?:e(?P<mu>\d+))?$")


def to_text(x: LocalFieldElement) -> str:
    if not x:
        return "0"
    parts = []
    for k, coeff in x.terms():
        body = coefficient_text(coeff)
        if body == "1":
            parts.append(f"p^{k}")
        elif "+" in body:
            parts.append(f"({body})*p^{k}")
        else:
            parts.append(f"{body}*p^{k}")
    return " + ".join(parts)


def _parse_coefficient(spec: FieldSpec, body: str, offset: int) -> GFElement:
    body = body.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    total = spec.zero()
    for mono in body.split("+"):
        mono = mono.strip()
        m = _MONO_RE.match(mono)
        if not m or not mono:
            raise ParseError(f"bad coefficient monomial {mono!r}", offset)
        scalar = int(m.group("scalar")) if m.group("scalar") else 1
        mu = int(m.group("mu")) if m.group("mu") is not None else 0
        if scalar >= spec.p:
            raise ParseError(f"scalar {scalar} out of range for GF({spec.p})", offset)
        if mu >= spec.c:
            raise ParseError(f"basis index e{mu} out of range for c={spec.c}", offset)
        term = spec.epsilon(mu)
        total = total + spec.element(scalar) * term
    return total


def parse_element(spec: FieldSpec, text: str) -> LocalFieldElement:
    """Parse the textual rendering back, bit-exactly."""
    stripped = text.strip()
    if stripped == "0":
        return LocalFieldElement.zero(spec)
    terms: dict[int, GFElement] = {}
    offset = 0
    depth = 0
    start = 0
    chunks = []
    for i, ch in enumerate(stripped):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "+" and depth == 0:
            chunks.append((start, stripped[start:i]))
            start = i + 1
    chunks.append((start, stripped[start:]))
    for offset, chunk in chunks:
        chunk = chunk.strip().replace(" ", "")
        m = _TERM_RE.match(chunk)
        if not m:
            raise ParseError(f"bad term {chunk!r}", offset)
        exp = int(m.group("exp"))
        coeff_body = m.group("coeff")
        coeff = spec.one() if coeff_body is None else _parse_coefficient(spec, coeff_body, offset)
        if exp in terms:
            raise ParseError(f"duplicate exponent {exp}", offset)
        terms[exp] = coeff
    return LocalFieldElement.from_terms(spec, terms)
