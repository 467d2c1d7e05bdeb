"""Finite-dimensional model of L^2(K).

Functions live on the quotient grid G(M, N) = p^-M D / p^N D: canonical
representatives are Laurent polynomials with exponents in [-M, N-1], so the
grid has q^(M+N) points, each carrying Haar weight q^-N (the indicator of D
then has norm 1).

Grid points are enumerated in mixed-radix digit order with the coefficient
of p^-M fastest: a point with GF(q) digit codes d_0..d_(D-1) at exponents
-M..N-1 has index sum_j d_j * q^j.  This order is part of the file format
("mixed-radix-v1") and must not change.

Operators:
  translate   T_a f(t) = f(t - a)        (a must be grid-exact)
  modulate    E_b f(t) = chi(b t) f(t)
  dilate      D_{p^j} f(t) = q^(j/2) f(p^-j t), moving (M, N) to (M-j, N+j)
  embed       isometric inclusion into a larger window
  fourier     fhat(g) = q^-N sum_x f(x) conj(chi(g x)) on the dual grid
              G(N, M); Parseval holds and the double transform is parity.

The direct O(n^2) transform is the reference; ``method="radix"`` selects the
tensor-factorized fast path, which must agree with it to 1e-12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import (
    DegenerateInputError,
    GridExactnessError,
    SpecMismatchError,
    WindowError,
)
from .gf import FieldSpec
from .laurent import ExponentWindow, LocalFieldElement

ENUMERATION_VERSION = "mixed-radix-v1"


@dataclass(frozen=True)
class ModelWindow:
    """The grid G(M, N): support exponent M, resolution exponent N."""

    spec: FieldSpec
    M: int
    N: int

    def __post_init__(self):
        if self.M < 0 or self.N < 0:
            raise ValueError(f"window exponents must be nonnegative, got ({self.M}, {self.N})")

    @property
    def dim(self) -> int:
        return self.spec.q ** (self.M + self.N)

    @property
    def depth(self) -> int:
        return self.M + self.N

    @property
    def weight(self) -> float:
        """Haar mass of one grid point."""
        return float(self.spec.q) ** (-self.N)

    def dual(self) -> "ModelWindow":
        return ModelWindow(self.spec, self.N, self.M)

    def exponents(self) -> range:
        return range(-self.M, self.N)

    # -- point <-> index ------------------------------------------------------

    def point(self, index: int) -> LocalFieldElement:
        if not 0 <= index < self.dim:
            raise IndexError(f"index {index} out of range for dim {self.dim}")
        q = self.spec.q
        terms = {}
        for exp in self.exponents():
            index, digit = divmod(index, q)
            if digit:
                terms[exp] = self.spec.element(digit)
        return LocalFieldElement.from_terms(self.spec, terms)

    def index_of(self, x: LocalFieldElement) -> int:
        if x and (x.lo < -self.M or x.hi > self.N - 1):
            raise GridExactnessError(
                f"element {x} is not representable on window ({self.M}, {self.N})"
            )
        q = self.spec.q
        index = 0
        for exp in reversed(self.exponents()):
            index = index * q + x.coeff(exp).to_int()
        return index

    def points(self) -> Iterator[LocalFieldElement]:
        for i in range(self.dim):
            yield self.point(i)

    def contains(self, x: LocalFieldElement) -> bool:
        return (not x) or (x.lo >= -self.M and x.hi <= self.N - 1)


# -- cached per-spec / per-window tables ---------------------------------------


@lru_cache(maxsize=None)
def _gf_tables(spec: FieldSpec):
    q = spec.q
    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    chi = np.zeros((q, q), dtype=np.int64)  # coordinate of 1 in the product
    for a in range(q):
        ea = spec.element(a)
        for b in range(q):
            eb = spec.element(b)
            add[a, b] = (ea + eb).to_int()
            prod = ea * eb
            mul[a, b] = prod.to_int()
            chi[a, b] = prod.coeffs[0]
    neg = np.array([spec.neg_code(a) for a in range(q)], dtype=np.int64)
    sub = add[:, neg]
    return {"add": add, "sub": sub, "neg": neg, "mul": mul, "chi": chi}


@lru_cache(maxsize=None)
def _digit_matrix(q: int, depth: int) -> np.ndarray:
    """(q^depth, depth) array: row i holds the base-q digits of i, digit 0 first."""
    idx = np.arange(q**depth, dtype=np.int64)
    digits = np.empty((q**depth, depth), dtype=np.int64)
    for j in range(depth):
        idx, digits[:, j] = np.divmod(idx, q)[0], idx % q
    return digits


def _element_digits(window: ModelWindow, x: LocalFieldElement) -> np.ndarray:
    """Digit codes of a grid-exact element, aligned with the window exponents."""
    if not window.contains(x):
        raise GridExactnessError(
            f"element {x} is not representable on window ({window.M}, {window.N})"
        )
    return np.array([x.coeff(exp).to_int() for exp in window.exponents()], dtype=np.int64)


def _digits_to_index(q: int, digits: np.ndarray) -> np.ndarray:
    weights = q ** np.arange(digits.shape[-1], dtype=np.int64)
    return digits @ weights


# -- sampled functions ----------------------------------------------------------


class SampledFunction:
    """A complex function on a grid, the finite stand-in for f in L^2(K)."""

    __slots__ = ("window", "values")

    def __init__(self, window: ModelWindow, values):
        arr = np.array(values, dtype=np.complex128)
        if arr.shape != (window.dim,):
            raise SpecMismatchError(
                f"expected {window.dim} values for window ({window.M}, {window.N}), "
                f"got shape {arr.shape}"
            )
        arr.flags.writeable = False
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "values", arr)

    def __setattr__(self, name, value):
        raise AttributeError("SampledFunction is immutable")

    def __repr__(self):
        w = self.window
        return f"SampledFunction(window=({w.M},{w.N}), q={w.spec.q}, dim={w.dim})"


def zeros(window: ModelWindow) -> SampledFunction:
    return SampledFunction(window, np.zeros(window.dim, dtype=np.complex128))


def indicator_of_integers(window: ModelWindow) -> SampledFunction:
    """The indicator of D on the grid; has norm exactly 1."""
    digits = _digit_matrix(window.spec.q, window.depth)
    mask = np.all(digits[:, : window.M] == 0, axis=1) if window.M else np.ones(window.dim, bool)
    return SampledFunction(window, mask.astype(np.complex128))


def random_function(window: ModelWindow, rng: np.random.Generator, normalized: bool = True) -> SampledFunction:
    """Independent standard complex Gaussian values, optionally normalized."""
    vals = rng.standard_normal(window.dim) + 1j * rng.standard_normal(window.dim)
    f = SampledFunction(window, vals)
    if normalized:
        n = norm(f)
        if n == 0:
            raise DegenerateInputError("degenerate random draw")
        f = SampledFunction(window, vals / n)
    return f


def _same_window(f: SampledFunction, g: SampledFunction) -> None:
    if f.window != g.window:
        raise SpecMismatchError("functions live on different windows")


def inner_product(f: SampledFunction, g: SampledFunction) -> complex:
    """Haar-weighted inner product q^-N sum f conj(g)."""
    _same_window(f, g)
    return complex(f.window.weight * np.vdot(g.values, f.values))


def norm(f: SampledFunction) -> float:
    return math.sqrt(f.window.weight) * float(np.linalg.norm(f.values))


def evaluate(f: SampledFunction, x: LocalFieldElement) -> complex:
    """Value of f at a grid-exact point."""
    return complex(f.values[f.window.index_of(x)])


def translate(f: SampledFunction, a: LocalFieldElement) -> SampledFunction:
    """T_a f(t) = f(t - a); ``a`` must reduce exactly to a grid point."""
    window = f.window
    a_digits = _element_digits(window, a)
    tables = _gf_tables(window.spec)
    digits = _digit_matrix(window.spec.q, window.depth)
    src_digits = tables["sub"][digits, a_digits[np.newaxis, :]]
    src = _digits_to_index(window.spec.q, src_digits)
    return SampledFunction(window, f.values[src])


def modulation_exponents(
    window: ModelWindow,
    b: LocalFieldElement,
    exp_window: ExponentWindow | None = None,
) -> np.ndarray:
    """Integer exponents e(x) mod p with chi(b x) = exp(2 pi i e(x)/p).

    Only the coefficients of b at exponents [-N, M-1] can pair into the
    coefficient of p^-1, so the phase is exact regardless of the rest of b.
    """
    spec = window.spec
    if exp_window is not None and b:
        for exp in window.exponents():
            probe = b.shift(exp)  # support of b*x for a monomial grid point
            exp_window.require(probe, "modulation product")
    tables = _gf_tables(spec)
    digits = _digit_matrix(spec.q, window.depth)
    b_codes = np.array(
        [b.coeff(-1 - exp).to_int() for exp in window.exponents()], dtype=np.int64
    )
    total = np.zeros(window.dim, dtype=np.int64)
    for pos in range(window.depth):
        total += tables["chi"][b_codes[pos], digits[:, pos]]
    return total % spec.p


def modulate(
    f: SampledFunction,
    b: LocalFieldElement,
    exp_window: ExponentWindow | None = None,
) -> SampledFunction:
    """E_b f(t) = chi(b t) f(t)."""
    exps = modulation_exponents(f.window, b, exp_window)
    phases = np.exp(2j * np.pi * exps / f.window.spec.p)
    return SampledFunction(f.window, f.values * phases)


def dilate(f: SampledFunction, j: int) -> SampledFunction:
    """D_{p^j} f(t) = q^(j/2) f(p^-j t) on the window (M-j, N+j).

    In the canonical enumeration the digit vector of t on the new window
    equals the digit vector of p^-j t on the old one, so dilation is a pure
    rescaling onto the shifted window.
    """
    window = f.window
    if window.M - j < 0 or window.N + j < 0:
        raise WindowError(
            f"dilation by p^{j} leaves window ({window.M}, {window.N}) invalid"
        )
    target = ModelWindow(window.spec, window.M - j, window.N + j)
    scale = float(window.spec.q) ** (j / 2.0)
    return SampledFunction(target, f.values * scale)


def embed(f: SampledFunction, target: ModelWindow) -> SampledFunction:
    """Extend by zero beyond p^-M D and replicate across refined cosets."""
    source = f.window
    if target.spec != source.spec:
        raise SpecMismatchError("windows over different field specs")
    if target.M < source.M or target.N < source.N:
        raise SpecMismatchError(
            f"cannot embed window ({source.M}, {source.N}) into smaller "
            f"({target.M}, {target.N})"
        )
    if target == source:
        return f
    q = source.spec.q
    digits = _digit_matrix(q, target.depth)
    head = target.M - source.M  # positions below the source support
    if head:
        mask = np.all(digits[:, :head] == 0, axis=1)
    else:
        mask = np.ones(target.dim, dtype=bool)
    src_idx = _digits_to_index(q, digits[:, head : head + source.depth])
    values = np.where(mask, f.values[src_idx], 0.0)
    return SampledFunction(target, values)


# -- Vilenkin-Fourier transform --------------------------------------------------


@lru_cache(maxsize=None)
def _transform_exponent_matrix(window: ModelWindow) -> np.ndarray:
    """E[g, x] mod p with chi(g x) = exp(2 pi i E/p), g on the dual grid."""
    spec = window.spec
    depth = window.depth
    tables = _gf_tables(spec)
    digits = _digit_matrix(spec.q, depth)
    total = np.zeros((window.dim, window.dim), dtype=np.int64)
    for pos in range(depth):
        total += tables["chi"][np.ix_(digits[:, depth - 1 - pos], digits[:, pos])]
    return total % spec.p


@lru_cache(maxsize=None)
def transform_matrix(window: ModelWindow) -> np.ndarray:
    """Dense reference transform: row g, column x, entry q^-N conj(chi(g x))."""
    spec = window.spec
    exponents = _transform_exponent_matrix(window)
    return window.weight * np.exp(-2j * np.pi * exponents / spec.p)


def fourier(f: SampledFunction, method: str = "direct") -> SampledFunction:
    """fhat(g) = q^-N sum_x f(x) conj(chi(g x)) on the dual grid G(N, M)."""
    window = f.window
    dual = window.dual()
    if method == "direct":
        values = transform_matrix(window) @ f.values
    elif method == "radix":
        values = _fourier_radix(f)
    else:
        raise ValueError(f"unknown transform method {method!r}")
    return SampledFunction(dual, values)


def _fourier_radix(f: SampledFunction) -> np.ndarray:
    """Tensor-factorized transform, O(n q depth)."""
    spec = f.window.spec
    q, depth = spec.q, f.window.depth
    if depth == 0:
        return f.values * f.window.weight
    chi = _gf_tables(spec)["chi"]
    kernel = np.exp(-2j * np.pi * chi / spec.p)
    arr = f.values.reshape((q,) * depth)
    # C-order reshape puts digit d_k on axis depth-1-k; the kernel on that
    # axis produces the dual digit for the same axis position.
    for axis in range(depth):
        arr = np.moveaxis(np.tensordot(kernel, arr, axes=([1], [axis])), 0, axis)
    arr = arr.transpose(tuple(reversed(range(depth))))
    return arr.reshape(-1) * f.window.weight


def inverse_fourier(g: SampledFunction, method: str = "direct") -> SampledFunction:
    """Inverse of ``fourier``: lands back on the dual of g's window."""
    conj_g = SampledFunction(g.window, np.conj(g.values))
    out = fourier(conj_g, method=method)
    return SampledFunction(out.window, np.conj(out.values))
