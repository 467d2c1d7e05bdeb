"""Seeded random instances for theorem sweeps.

Generators are drawn with independent standard complex Gaussian grid values
and normalized; scalar coefficients are drawn log-uniform in [0.1, 10].
Every instance is a pure function of its 64-bit seed, which is recorded in
the resulting report.

The redundant base configuration uses a = p, b = 1 on the ambient window:
the translations u(k) * p, k < q^(M+1), sweep the whole grid and the
modulations u(m), m < q^N, add a q-fold redundant layer, so the system has
q * dim vectors and is (generically) a frame for the full ambient space.
Partition sweeps draw blocks of size at most two over that q-fold redundant
layer, the regime the partition-combination statements are about; coarser
partitions can drop rank below the span and are exercised separately in the
unit tests.
"""

from __future__ import annotations

import numpy as np

from .laurent import LocalFieldElement
from .model import ModelWindow, indicator_of_integers, random_function
from .systems import WavePacketParams, WavePacketSystem, generate_system
from .combinations import CoefficientFamily, CombinationMatrix, IndexPartition


def log_uniform(rng: np.random.Generator, low: float = 0.1, high: float = 10.0) -> float:
    return float(np.exp(rng.uniform(np.log(low), np.log(high))))


def redundant_params(window: ModelWindow) -> WavePacketParams:
    """a = p, b = 1: q-fold redundant Gabor layer on the ambient grid."""
    spec = window.spec
    return WavePacketParams(
        a=LocalFieldElement.prime(spec),
        b=LocalFieldElement.one(spec),
        j_values=(0,),
        k_count=spec.q ** (window.M + 1),
        m_count=spec.q**window.N,
    )


def orthonormal_params(window: ModelWindow) -> WavePacketParams:
    """a = b = 1 with the full label grid: with psi = 1_D this is an
    orthonormal basis of the window."""
    spec = window.spec
    return WavePacketParams(
        a=LocalFieldElement.one(spec),
        b=LocalFieldElement.one(spec),
        j_values=(0,),
        k_count=spec.q**window.M,
        m_count=spec.q**window.N,
    )


def orthonormal_basis_system(window: ModelWindow) -> WavePacketSystem:
    return generate_system(indicator_of_integers(window), orthonormal_params(window), window)


def random_redundant_system(window: ModelWindow, rng: np.random.Generator) -> WavePacketSystem:
    psi = random_function(window, rng)
    return generate_system(psi, redundant_params(window), window)


def pair_partition(labels, rng: np.random.Generator) -> IndexPartition:
    """Random partition into blocks of size at most two."""
    order = [labels[i] for i in rng.permutation(len(labels))]
    blocks = []
    for r in range(0, len(order), 2):
        members = tuple(order[r : r + 2])
        blocks.append(((r // 2, 0, 0), members))
    return IndexPartition(tuple(blocks))


def urn_partition(labels, rng: np.random.Generator, urns: int) -> IndexPartition:
    """Each label lands in one of ``urns`` urns; empty urns are dropped."""
    assignment = rng.integers(0, urns, size=len(labels))
    buckets: dict[int, list] = {}
    for label, urn in zip(labels, assignment):
        buckets.setdefault(int(urn), []).append(label)
    blocks = tuple(((r, 0, 0), tuple(members)) for r, members in sorted(buckets.items()))
    return IndexPartition(blocks)


def log_uniform_coefficients(
    labels,
    rng: np.random.Generator,
    low: float = 0.1,
    high: float = 10.0,
) -> CoefficientFamily:
    return CoefficientFamily({label: log_uniform(rng, low, high) for label in labels})


def diagonal_dominant_matrix(
    labels,
    rng: np.random.Generator,
    off_scale: float = 0.15,
    off_density: float = 0.3,
) -> CombinationMatrix:
    """Square combination matrix with log-uniform diagonal and sparse small
    off-diagonal noise; mu > 0 for most draws."""
    n = len(labels)
    diag = np.array([log_uniform(rng) for _ in range(n)])
    noise = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    mask = rng.random((n, n)) < off_density
    np.fill_diagonal(mask, False)
    matrix = np.diag(diag).astype(np.complex128)
    matrix += off_scale * float(np.min(diag)) / max(np.sqrt(n), 1.0) * noise * mask
    return CombinationMatrix(tuple(range(n)), tuple(labels), matrix)


def random_finite_sum_instance(
    window: ModelWindow,
    rng: np.random.Generator,
    count: int = 2,
    boost_index: int | None = None,
    boost: tuple[float, float] = (4.0, 12.0),
    damp: tuple[float, float] = (0.02, 0.2),
) -> tuple[list[WavePacketSystem], list[float]]:
    """Systems sharing one label grid with positive weights.

    With ``boost_index`` set, that system's weight is drawn large and the
    others' small, which places the instance inside the sufficient-condition
    regime of the finite-sum statements.
    """
    params = redundant_params(window)
    systems = [generate_system(random_function(window, rng), params, window) for _ in range(count)]
    if boost_index is None:
        alphas = [log_uniform(rng) for _ in range(count)]
    else:
        alphas = [log_uniform(rng, *damp) for _ in range(count)]
        alphas[boost_index] = log_uniform(rng, *boost)
    return systems, alphas
