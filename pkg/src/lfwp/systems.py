"""Wave packet systems and spectral frame bounds.

A system is the family D_{p^j} T_{u(k)a} E_{u(m)b} psi over a finite label
grid (j, k, m), with modulation applied first and dilation last, every
vector embedded into one ambient window.  Frame bounds are the extreme
eigenvalues of the frame operator S = weight * sum_i g_i (x) conj(g_i),
which represents f -> sum_i |<f, g_i>|^2 under the Haar-weighted inner
product.

Truncated families rarely span the whole ambient space, so bounds are
reported both on the full space and restricted to the family's span (the
smallest nonzero eigenvalue); reports carry both, clearly labeled.

The dense Hermitian eigensolver is the reference.  Power iteration
(largest eigenvalue) and shifted inverse iteration (smallest) form the
iterative path and are validated against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.linalg

from .character import u_map
from .errors import (
    DegenerateInputError,
    GridExactnessError,
    PreconditionError,
    SpecMismatchError,
    WindowError,
)
from .laurent import LocalFieldElement
from .model import ModelWindow, SampledFunction, dilate, embed, modulate, norm, translate

RANK_CUT = 1e-10  # relative singular value cut identifying the span
FRAME_REL_TOL = 1e-8  # default frame verdict threshold, relative to lambda_max


@dataclass(frozen=True)
class WavePacketParams:
    """Index grid and scales of a wave packet system."""

    a: LocalFieldElement
    b: LocalFieldElement
    j_values: tuple[int, ...]
    k_count: int
    m_count: int

    def __post_init__(self):
        if self.k_count < 1 or self.m_count < 1:
            raise ValueError("k_count and m_count must be positive")
        if len(set(self.j_values)) != len(self.j_values):
            raise ValueError("duplicate dilation exponents")
        object.__setattr__(self, "j_values", tuple(self.j_values))

    def labels(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(
            (j, k, m)
            for j in sorted(self.j_values)
            for k in range(self.k_count)
            for m in range(self.m_count)
        )


@dataclass(frozen=True)
class FrameBounds:
    """Extreme spectrum of a frame operator and the frame verdict."""

    A: float
    B: float
    is_frame: bool
    tol: float

    @classmethod
    def from_extremes(cls, lo: float, hi: float, rel_tol: float = FRAME_REL_TOL) -> "FrameBounds":
        lo = max(float(lo), 0.0)
        hi = max(float(hi), 0.0)
        tol = rel_tol * hi
        return cls(A=lo, B=hi, is_frame=lo > tol, tol=tol)

    def as_dict(self) -> dict:
        return {"A": self.A, "B": self.B, "isFrame": self.is_frame, "tol": self.tol}


class VectorFamily:
    """An ordered finite family of vectors in one ambient window."""

    __slots__ = ("window", "matrix", "labels")

    def __init__(self, window: ModelWindow, matrix: np.ndarray, labels: Sequence | None = None):
        matrix = np.array(matrix, dtype=np.complex128)
        if matrix.ndim != 2 or matrix.shape[1] != window.dim:
            raise SpecMismatchError(
                f"family matrix shape {matrix.shape} does not match window dim {window.dim}"
            )
        if matrix.shape[0] == 0:
            raise DegenerateInputError("empty family")
        matrix.flags.writeable = False
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else tuple(range(matrix.shape[0])))

    def __setattr__(self, name, value):
        raise AttributeError("VectorFamily is immutable")

    def __len__(self) -> int:
        return self.matrix.shape[0]

    def vector(self, i: int) -> SampledFunction:
        return SampledFunction(self.window, self.matrix[i])

    @classmethod
    def from_functions(cls, functions: Sequence[SampledFunction], labels=None) -> "VectorFamily":
        if not functions:
            raise DegenerateInputError("empty family")
        window = functions[0].window
        for f in functions[1:]:
            if f.window != window:
                raise SpecMismatchError("family members live on different windows")
        return cls(window, np.stack([f.values for f in functions]), labels)


class WavePacketSystem(VectorFamily):
    """A wave packet family together with its generator and parameters."""

    __slots__ = ("params", "generator")

    def __init__(self, params, generator, window, matrix, labels):
        super().__init__(window, matrix, labels)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "generator", generator)

    def vector_for_label(self, label: tuple[int, int, int]) -> SampledFunction:
        """Rebuild one vector from its label; must equal the stored row."""
        j, k, m = label
        return _build_vector(self.generator, self.params, self.window, j, k, m)


def _build_vector(psi, params, ambient, j, k, m) -> SampledFunction:
    spec = ambient.spec
    v = modulate(psi, u_map(spec, m) * params.b)
    v = translate(v, u_map(spec, k) * params.a)
    v = dilate(v, j)
    return embed(v, ambient)


def generate_system(
    psi: SampledFunction,
    params: WavePacketParams,
    ambient: ModelWindow,
) -> WavePacketSystem:
    """Build {D_{p^j} T_{u(k)a} E_{u(m)b} psi} embedded into the ambient window.

    Labels run j (outer, ascending), then k, then m; the operators apply in
    the written order, modulation innermost.
    """
    if psi.window.spec != ambient.spec:
        raise SpecMismatchError("generator and ambient window use different field specs")
    if norm(psi) == 0.0:
        raise DegenerateInputError("zero generator")
    gw = psi.window
    for j in params.j_values:
        if gw.M - j < 0 or gw.N + j < 0:
            raise WindowError(f"dilation exponent j={j} invalid for generator window ({gw.M}, {gw.N})")
        if gw.M - j > ambient.M or gw.N + j > ambient.N:
            raise WindowError(
                f"dilated window ({gw.M - j}, {gw.N + j}) does not fit ambient ({ambient.M}, {ambient.N})"
            )
    for k in range(params.k_count):
        shift = u_map(ambient.spec, k) * params.a
        if not gw.contains(shift):
            raise GridExactnessError(
                f"translation u({k})*a = {shift} with a = {params.a} is not "
                f"grid-exact on window ({gw.M}, {gw.N})"
            )
    labels = params.labels()
    rows = np.empty((len(labels), ambient.dim), dtype=np.complex128)
    for i, (j, k, m) in enumerate(labels):
        rows[i] = _build_vector(psi, params, ambient, j, k, m).values
    return WavePacketSystem(params, psi, ambient, rows, labels)


# -- Gram matrix and frame operator ------------------------------------------------


def gram_matrix(family: VectorFamily) -> np.ndarray:
    """G[i, l] = <g_l, g_i>; Hermitian positive semidefinite."""
    v = family.matrix
    return family.window.weight * (v.conj() @ v.T)


def frame_operator(family: VectorFamily) -> np.ndarray:
    """S with <S f, f> = sum_i |<f, g_i>|^2 in the Haar-weighted inner product."""
    v = family.matrix
    return family.window.weight * (v.T @ v.conj())


def frame_bounds(family: VectorFamily, rel_tol: float = FRAME_REL_TOL, method: str = "dense") -> FrameBounds:
    """Extreme eigenvalues of the frame operator on the full ambient space."""
    s = frame_operator(family)
    if method == "dense":
        eig = np.linalg.eigvalsh(s)
        lo, hi = eig[0], eig[-1]
    elif method == "iterative":
        hi = power_iteration(s)
        lo = inverse_iteration_min(s, hi)
    else:
        raise ValueError(f"unknown method {method!r}")
    return FrameBounds.from_extremes(lo, hi, rel_tol)


def span_singular_values(family: VectorFamily) -> np.ndarray:
    return np.linalg.svd(family.matrix, compute_uv=False)


def span_basis(matrix: np.ndarray, rank_cut: float = RANK_CUT) -> np.ndarray:
    """Orthonormal basis (columns) of the row span of ``matrix``."""
    _, s, vh = np.linalg.svd(matrix, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        return np.zeros((matrix.shape[1], 0), dtype=np.complex128)
    rank = int(np.sum(s > rank_cut * s[0]))
    return vh[:rank].T


def frame_bounds_span(
    family: VectorFamily,
    rel_tol: float = FRAME_REL_TOL,
    rank_cut: float = RANK_CUT,
) -> tuple[FrameBounds, int]:
    """Bounds restricted to span(family): smallest *nonzero* eigenvalue and rank."""
    s = span_singular_values(family)
    if s[0] == 0.0:
        return FrameBounds.from_extremes(0.0, 0.0, rel_tol), 0
    rank = int(np.sum(s > rank_cut * s[0]))
    w = family.window.weight
    return FrameBounds.from_extremes(w * s[rank - 1] ** 2, w * s[0] ** 2, rel_tol), rank


def bounds_report(family: VectorFamily, rel_tol: float = FRAME_REL_TOL) -> dict:
    """Span and full-ambient bounds side by side."""
    span, rank = frame_bounds_span(family, rel_tol)
    ambient = frame_bounds(family, rel_tol)
    return {"span": span, "ambient": ambient, "rank": rank}


# -- iterative spectral estimates ---------------------------------------------------


def power_iteration(
    s: np.ndarray,
    tol: float = 1e-10,
    max_iter: int = 50000,
    seed: int = 7,
) -> float:
    """Largest eigenvalue of a Hermitian PSD matrix by power iteration."""
    n = s.shape[0]
    rng = np.random.default_rng(seed)
    x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    x /= np.linalg.norm(x)
    lam = 0.0
    scale = float(np.linalg.norm(s, ord=1))
    if scale == 0.0:
        return 0.0
    for _ in range(max_iter):
        y = s @ x
        ny = np.linalg.norm(y)
        if ny == 0.0:
            x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            x /= np.linalg.norm(x)
            continue
        x = y / ny
        z = s @ x
        lam = float(np.real(np.vdot(x, z)))
        residual = float(np.linalg.norm(z - lam * x))
        if residual <= tol * scale:
            break
    return lam


def inverse_iteration_min(
    s: np.ndarray,
    lam_max: float | None = None,
    tol: float = 1e-10,
    max_iter: int = 50000,
    seed: int = 11,
) -> float:
    """Smallest eigenvalue of a Hermitian PSD matrix by shifted inverse iteration.

    Iterates solves of (S + delta I) x = y with a tiny positive shift, so a
    singular S converges immediately to its kernel.
    """
    n = s.shape[0]
    if lam_max is None:
        lam_max = power_iteration(s, tol=tol, seed=seed + 1)
    if lam_max <= 0.0:
        return 0.0
    delta = 1e-12 * lam_max
    shifted = s + delta * np.eye(n)
    try:
        factor = scipy.linalg.cho_factor(shifted, check_finite=False)
    except np.linalg.LinAlgError:
        delta = 1e-8 * lam_max
        factor = scipy.linalg.cho_factor(s + delta * np.eye(n), check_finite=False)
    rng = np.random.default_rng(seed)
    x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    x /= np.linalg.norm(x)
    lam = float(np.real(np.vdot(x, s @ x)))
    for _ in range(max_iter):
        y = scipy.linalg.cho_solve(factor, x, check_finite=False)
        x = y / np.linalg.norm(y)
        z = s @ x
        lam = float(np.real(np.vdot(x, z)))
        residual = float(np.linalg.norm(z - lam * x))
        if residual <= tol * lam_max:
            break
    return max(lam, 0.0)


def restricted(s: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """Compression basis^H S basis of a Hermitian matrix to a subspace."""
    m = basis.conj().T @ s @ basis
    return 0.5 * (m + m.conj().T)


def require_frame_for_span(
    family: VectorFamily,
    rel_tol: float = FRAME_REL_TOL,
    what: str = "system",
) -> tuple[FrameBounds, np.ndarray]:
    """Assert the family is a frame for its span; return (bounds, span basis)."""
    bounds, _ = frame_bounds_span(family, rel_tol)
    if not bounds.is_frame:
        raise PreconditionError(f"{what} is not a frame for its span (A={bounds.A:.3e})")
    return bounds, span_basis(family.matrix)
