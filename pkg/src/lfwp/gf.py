"""Arithmetic in GF(q), q = p^c, in polynomial-basis representation.

Elements are residue classes of GF(p)[x] modulo a fixed monic irreducible
polynomial of degree c.  The basis is the power basis {1, x, ..., x^(c-1)}
(written 1, e1, ..., e(c-1) in textual output) and coordinates are integers
in [0, p-1].  Fields stay small here, so the irreducibility check is plain
trial division and inverses go through Fermat exponentiation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import SpecMismatchError

# Monic irreducible defaults per (p, c); coefficients low -> high degree.
DEFAULT_MODULI = {
    (2, 1): (0, 1),        # x
    (3, 1): (0, 1),
    (5, 1): (0, 1),
    (2, 2): (1, 1, 1),     # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),  # x^3 + x + 1
    (3, 2): (1, 0, 1),     # x^2 + 1
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _trim(poly: Sequence[int]) -> tuple[int, ...]:
    coeffs = list(poly)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_mod(a: Sequence[int], modulus: Sequence[int], p: int) -> tuple[int, ...]:
    # modulus is monic; ordinary long division, keep the remainder
    rem = list(a)
    d = len(modulus) - 1
    while rem and rem[-1] == 0:
        rem.pop()
    while len(rem) - 1 >= d:
        lead = rem[-1]
        shift = len(rem) - 1 - d
        for i, mi in enumerate(modulus):
            rem[i + shift] = (rem[i + shift] - lead * mi) % p
        while rem and rem[-1] == 0:
            rem.pop()
    return tuple(rem)


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    modulus = _trim(modulus)
    deg = len(modulus) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        # enumerate monic polynomials of degree d by their p^d lower coefficients
        for code in range(p**d):
            cand = []
            v = code
            for _ in range(d):
                cand.append(v % p)
                v //= p
            cand.append(1)
            if not _poly_mod(modulus, cand, p):
                return False
    return True


def _find_modulus(p: int, c: int) -> tuple[int, ...]:
    if (p, c) in DEFAULT_MODULI:
        return DEFAULT_MODULI[(p, c)]
    # lexicographically smallest monic irreducible of degree c (deterministic)
    for code in range(p**c):
        cand = []
        v = code
        for _ in range(c):
            cand.append(v % p)
            v //= p
        cand.append(1)
        if is_irreducible(cand, p):
            return tuple(cand)
    raise ValueError(f"no irreducible polynomial of degree {c} over GF({p})")


class FieldSpec:
    """A concrete presentation of GF(p^c) as GF(p)[x]/(modulus).

    Instances are immutable and compare by (p, c, modulus).
    """

    __slots__ = ("p", "c", "q", "modulus")

    def __init__(self, p: int, c: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if c < 1:
            raise ValueError(f"c = {c} must be a positive integer")
        if modulus is None:
            modulus = _find_modulus(p, c)
        modulus = tuple(int(x) % p for x in modulus)
        modulus = _trim(modulus)
        if len(modulus) - 1 != c:
            raise ValueError(f"modulus must have degree c = {c}")
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {list(modulus)} is reducible over GF({p})")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "q", p**c)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.c == other.c
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.c, self.modulus))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, c={self.c}, modulus={list(self.modulus)})"

    # -- element construction ------------------------------------------------

    def element(self, value: int | Iterable[int]) -> "GFElement":
        """Build an element from an integer code (base-p digits are the
        coordinates, low degree first) or from a coordinate sequence."""
        if isinstance(value, int):
            if value < 0 or value >= self.q:
                value %= self.q
            coords = []
            v = value
            for _ in range(self.c):
                coords.append(v % self.p)
                v //= self.p
            return GFElement(self, tuple(coords))
        coords = tuple(int(x) % self.p for x in value)
        if len(coords) != self.c:
            raise ValueError(f"expected {self.c} coordinates, got {len(coords)}")
        return GFElement(self, coords)

    def zero(self) -> "GFElement":
        return GFElement(self, (0,) * self.c)

    def one(self) -> "GFElement":
        return GFElement(self, (1,) + (0,) * (self.c - 1))

    def epsilon(self, mu: int) -> "GFElement":
        """Basis element e_mu = class of x^mu (e_0 = 1)."""
        if not 0 <= mu < self.c:
            raise ValueError(f"mu = {mu} out of range for c = {self.c}")
        coords = [0] * self.c
        coords[mu] = 1
        return GFElement(self, tuple(coords))

    def elements(self) -> Iterator["GFElement"]:
        for code in range(self.q):
            yield self.element(code)

    # integer-coded arithmetic, used to build lookup tables in the model layer

    def add_code(self, a: int, b: int) -> int:
        return (self.element(a) + self.element(b)).to_int()

    def mul_code(self, a: int, b: int) -> int:
        return (self.element(a) * self.element(b)).to_int()

    def neg_code(self, a: int) -> int:
        return (-self.element(a)).to_int()


@dataclass(frozen=True)
class GFElement:
    """An element of GF(q) as coordinates in the power basis."""

    spec: FieldSpec
    coeffs: tuple[int, ...]

    def _check(self, other: "GFElement") -> None:
        if not isinstance(other, GFElement):
            raise TypeError(f"expected GFElement, got {type(other).__name__}")
        if self.spec != other.spec:
            raise SpecMismatchError("operands from different field specs")

    def __add__(self, other: "GFElement") -> "GFElement":
        self._check(other)
        p = self.spec.p
        return GFElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "GFElement") -> "GFElement":
        self._check(other)
        p = self.spec.p
        return GFElement(self.spec, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "GFElement":
        p = self.spec.p
        return GFElement(self.spec, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: "GFElement") -> "GFElement":
        self._check(other)
        spec = self.spec
        prod = _poly_mul(self.coeffs, other.coeffs, spec.p)
        red = _poly_mod(prod, spec.modulus, spec.p)
        coords = tuple(red) + (0,) * (spec.c - len(red))
        return GFElement(spec, coords)

    def __pow__(self, n: int) -> "GFElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.spec.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "GFElement":
        if not self:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self ** (self.spec.q - 2)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def to_int(self) -> int:
        """Integer code: coordinates read as base-p digits, low degree first."""
        code = 0
        for coeff in reversed(self.coeffs):
            code = code * self.spec.p + coeff
        return code

    def __repr__(self):
        return f"GFElement({coefficient_text(self)!r})"


def coefficient_text(x: GFElement) -> str:
    """Render a GF(q) element as a sum of basis monomials, e.g. '1+2*e1'."""
    terms = []
    for mu, coeff in enumerate(x.coeffs):
        if coeff == 0:
            continue
        if mu == 0:
            terms.append(str(coeff))
        elif coeff == 1:
            terms.append(f"e{mu}")
        else:
            terms.append(f"{coeff}*e{mu}")
    return "+".join(terms) if terms else "0"
