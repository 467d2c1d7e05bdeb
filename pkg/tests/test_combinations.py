"""Partition and matrix combinations: construction pathways, mu/nu, and
the behavior of the condition checkers on hand-computed instances."""

import numpy as np
import pytest

from lfwp import (
    CoefficientFamily,
    CombinationMatrix,
    FieldSpec,
    IndexPartition,
    LocalFieldElement,
    ModelWindow,
    SpecMismatchError,
    WavePacketParams,
    build_combined,
    combine_general,
    compute_mu_nu,
    finite_sum_system,
    frame_bounds,
    generate_system,
    norm,
    random_function,
)
from lfwp.combinations import block_deficiency
from lfwp.instances import (
    log_uniform_coefficients,
    orthonormal_basis_system,
    pair_partition,
    random_redundant_system,
    urn_partition,
)

Q2 = FieldSpec(2)
W11 = ModelWindow(Q2, 1, 1)


@pytest.fixture
def onb():
    return orthonormal_basis_system(W11)


def unit_coeffs(labels):
    return CoefficientFamily({label: 1.0 for label in labels})


def test_partition_rejects_overlap_and_gap(onb):
    labels = onb.labels
    with pytest.raises(SpecMismatchError):
        IndexPartition.from_blocks([((0, 0, 0), [labels[0], labels[0]])])
    part = IndexPartition.from_blocks([((0, 0, 0), [labels[0]])])
    with pytest.raises(SpecMismatchError):
        part.validate_for(labels)  # does not cover
    foreign = IndexPartition.from_blocks([((0, 0, 0), list(labels) + [(9, 9, 9)])])
    with pytest.raises(SpecMismatchError):
        foreign.validate_for(labels)
    IndexPartition.singletons(labels).validate_for(labels)


def test_coefficients_must_be_total(onb):
    partial = CoefficientFamily({onb.labels[0]: 1.0})
    with pytest.raises(SpecMismatchError):
        partial.validate_for(onb.labels)


def test_singleton_identity_combination(onb):
    part = IndexPartition.singletons(onb.labels)
    combined = build_combined(onb, part, unit_coeffs(onb.labels))
    assert np.allclose(combined.matrix, onb.matrix, atol=0)


def test_two_orthonormal_vectors_one_block(onb):
    labels = onb.labels
    part = IndexPartition.from_blocks(
        [((0, 0, 0), [labels[0], labels[1]])]
        + [((r, 0, 0), [labels[r + 1]]) for r in range(1, 3)]
    )
    combined = build_combined(onb, part, unit_coeffs(labels))
    assert norm(combined.vector(0)) == pytest.approx(np.sqrt(2.0), abs=1e-12)


def test_build_combined_matches_direct_sum():
    rng = np.random.default_rng(0)
    system = random_redundant_system(W11, rng)
    part = urn_partition(system.labels, rng, urns=4)
    coeffs = log_uniform_coefficients(system.labels, rng)
    combined = build_combined(system, part, coeffs)
    label_index = {label: i for i, label in enumerate(system.labels)}
    for row, (_, members) in zip(combined.matrix, part.sorted_blocks()):
        direct = np.zeros(W11.dim, dtype=complex)
        for member in members:
            direct += coeffs[member] * system.matrix[label_index[member]]
        assert np.max(np.abs(row - direct)) < 1e-12


def test_combine_general_identity_and_scaling(onb):
    ident = CombinationMatrix.identity(onb.labels)
    same = combine_general(ident, onb)
    assert np.allclose(same.matrix, onb.matrix, atol=0)
    twice = CombinationMatrix(ident.row_labels, ident.col_labels, 2.0 * np.eye(4))
    fb = frame_bounds(combine_general(twice, onb))
    assert fb.A == pytest.approx(4.0, abs=1e-10)
    assert fb.B == pytest.approx(4.0, abs=1e-10)


def test_block_matrix_reproduces_partition_path():
    rng = np.random.default_rng(1)
    system = random_redundant_system(W11, rng)
    part = pair_partition(system.labels, rng)
    coeffs = log_uniform_coefficients(system.labels, rng)
    u = CombinationMatrix.from_partition(part, coeffs, system.labels)
    assert np.array_equal(
        build_combined(system, part, coeffs).matrix,
        combine_general(u, system).matrix,
    )


def test_mu_nu_reference_values(onb):
    assert compute_mu_nu(CombinationMatrix.identity(onb.labels)) == (1.0, 1.0)
    d = np.eye(4, dtype=complex)
    d[0, 0] = 2.0
    mu, nu = compute_mu_nu(CombinationMatrix(tuple(range(4)), onb.labels, d))
    assert mu == pytest.approx(1.0)
    assert nu == pytest.approx(4.0)


def test_mu_nu_against_displayed_formulas():
    # brute-force evaluation of the displayed inf/sup over columns
    rng = np.random.default_rng(2)
    labels = tuple((0, 0, m) for m in range(8))
    matrix = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
    u = CombinationMatrix(tuple(range(8)), labels, matrix)
    mu, nu = compute_mu_nu(u)
    col_terms = []
    row_sums = []
    for t in range(8):
        diag_mass = sum(abs(matrix[s, t]) ** 2 for s in range(8))
        cross = sum(
            abs(sum(matrix[s, t] * np.conj(matrix[s, t2]) for s in range(8)))
            for t2 in range(8)
            if t2 != t
        )
        col_terms.append(diag_mass - cross)
        row_sums.append(diag_mass + cross)
    assert mu == pytest.approx(min(col_terms), abs=1e-12)
    assert nu == pytest.approx(max(row_sums), abs=1e-12)


def test_block_deficiency_values(onb):
    labels = onb.labels
    part = IndexPartition.from_blocks(
        [((0, 0, 0), [labels[0], labels[1]]), ((1, 0, 0), [labels[2]]), ((2, 0, 0), [labels[3]])]
    )
    equal = CoefficientFamily({labels[0]: 1.0, labels[1]: 1.0, labels[2]: 1.0, labels[3]: 1.0})
    # ordered pairs: 1 + 1 - (1 + 1) = 0 on the pair block
    assert block_deficiency(part, equal) == pytest.approx(0.0)
    # unordered variant keeps each pair once
    assert block_deficiency(part, equal, ordered_pairs=False) == pytest.approx(1.0)
    singles = IndexPartition.singletons(labels)
    assert block_deficiency(singles, equal) == pytest.approx(1.0)


def test_finite_sum_identity_and_cancellation(onb):
    same = finite_sum_system([onb], [1.0])
    assert np.allclose(same.matrix, onb.matrix, atol=0)
    flipped = finite_sum_system([onb], [-1.0])
    total = finite_sum_system([onb, onb], [1.0, 1.0])
    zero = total.matrix + 2.0 * flipped.matrix
    assert np.max(np.abs(zero)) == 0.0


def test_finite_sum_matches_direct_addition():
    rng = np.random.default_rng(3)
    from lfwp.instances import random_finite_sum_instance

    systems, _ = random_finite_sum_instance(W11, rng, count=3)
    alphas = [0.5, 1.5 + 0.25j, -2.0]
    summed = finite_sum_system(systems, alphas)
    direct = sum(a * s.matrix for a, s in zip(alphas, systems))
    assert np.max(np.abs(summed.matrix - direct)) < 1e-12


def test_finite_sum_rejects_mismatched_grids(onb):
    other_params = WavePacketParams(
        a=LocalFieldElement.one(Q2),
        b=LocalFieldElement.one(Q2),
        j_values=(0,),
        k_count=2,
        m_count=1,
    )
    rng = np.random.default_rng(4)
    other = generate_system(random_function(W11, rng), other_params, W11)
    with pytest.raises(SpecMismatchError):
        finite_sum_system([onb, other], [1.0, 1.0])


def test_scaling_covariance_of_combined_bounds():
    rng = np.random.default_rng(5)
    system = random_redundant_system(W11, rng)
    part = pair_partition(system.labels, rng)
    coeffs = log_uniform_coefficients(system.labels, rng)
    c = 3.0
    scaled = CoefficientFamily({k: c * v for k, v in coeffs.alpha.items()})
    fb = frame_bounds(build_combined(system, part, coeffs))
    fb_scaled = frame_bounds(build_combined(system, part, scaled))
    assert fb_scaled.A == pytest.approx(c**2 * fb.A, rel=1e-10)
    assert fb_scaled.B == pytest.approx(c**2 * fb.B, rel=1e-10)


def test_scaling_covariance_of_finite_sum_bounds():
    rng = np.random.default_rng(6)
    from lfwp.instances import random_finite_sum_instance

    systems, alphas = random_finite_sum_instance(W11, rng, count=2)
    c = 2.5
    fb = frame_bounds(finite_sum_system(systems, alphas))
    fb_scaled = frame_bounds(finite_sum_system(systems, [c * a for a in alphas]))
    assert fb_scaled.A == pytest.approx(c**2 * fb.A, rel=1e-10)
    assert fb_scaled.B == pytest.approx(c**2 * fb.B, rel=1e-10)
