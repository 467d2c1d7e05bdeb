"""Wave packet system construction, Gram matrices, frame operators, and
the spectral frame-bound paths."""

import numpy as np
import pytest

from lfwp import (
    DegenerateInputError,
    FieldSpec,
    LocalFieldElement,
    ModelWindow,
    VectorFamily,
    WavePacketParams,
    WindowError,
    dilate,
    frame_bounds,
    frame_operator,
    generate_system,
    gram_matrix,
    indicator_of_integers,
    inner_product,
    modulate,
    norm,
    random_function,
    translate,
)
from lfwp.instances import orthonormal_basis_system, random_redundant_system, redundant_params
from lfwp.systems import (
    SampledFunction,
    frame_bounds_span,
    inverse_iteration_min,
    power_iteration,
    require_frame_for_span,
)
from lfwp.errors import PreconditionError

Q2 = FieldSpec(2)
Q3 = FieldSpec(3)


def test_trivial_system_is_generator():
    w = ModelWindow(Q2, 1, 1)
    rng = np.random.default_rng(0)
    psi = random_function(w, rng)
    params = WavePacketParams(
        a=LocalFieldElement.zero(Q2),
        b=LocalFieldElement.zero(Q2),
        j_values=(0,),
        k_count=1,
        m_count=1,
    )
    system = generate_system(psi, params, w)
    assert len(system) == 1
    assert np.array_equal(system.matrix[0], psi.values)


def test_vectors_keep_generator_norm():
    w = ModelWindow(Q3, 1, 1)
    amb = ModelWindow(Q3, 2, 2)
    rng = np.random.default_rng(1)
    psi = random_function(w, rng, normalized=False)
    params = WavePacketParams(
        a=LocalFieldElement.one(Q3),
        b=LocalFieldElement.one(Q3),
        j_values=(-1, 0, 1),
        k_count=3,
        m_count=3,
    )
    system = generate_system(psi, params, amb)
    assert len(system) == 27
    for i in range(len(system)):
        assert norm(system.vector(i)) == pytest.approx(norm(psi), abs=1e-12)


def test_label_order_and_regeneration():
    w = ModelWindow(Q2, 1, 1)
    amb = ModelWindow(Q2, 2, 2)
    psi = indicator_of_integers(w)
    params = WavePacketParams(
        a=LocalFieldElement.one(Q2),
        b=LocalFieldElement.one(Q2),
        j_values=(1, 0),
        k_count=2,
        m_count=2,
    )
    system = generate_system(psi, params, amb)
    assert system.labels[:4] == ((0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1))
    assert system.labels[4:] == ((1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1))
    for i, label in enumerate(system.labels):
        again = system.vector_for_label(label)
        assert np.array_equal(again.values, system.matrix[i])


def test_generate_rejects_bad_input():
    w = ModelWindow(Q2, 1, 1)
    params = WavePacketParams(
        a=LocalFieldElement.one(Q2),
        b=LocalFieldElement.one(Q2),
        j_values=(0,),
        k_count=2,
        m_count=2,
    )
    with pytest.raises(DegenerateInputError):
        generate_system(SampledFunction(w, np.zeros(4)), params, w)
    bad_j = WavePacketParams(
        a=LocalFieldElement.one(Q2),
        b=LocalFieldElement.one(Q2),
        j_values=(1,),
        k_count=1,
        m_count=1,
    )
    with pytest.raises(WindowError):
        generate_system(indicator_of_integers(w), bad_j, w)
    with pytest.raises(ValueError):
        WavePacketParams(
            a=LocalFieldElement.one(Q2),
            b=LocalFieldElement.one(Q2),
            j_values=(0,),
            k_count=0,
            m_count=1,
        )


def test_spec_example_gabor_gram():
    # q = 2, window (1,1), psi = 1_D, a = b = 1, kCount = mCount = 2:
    # the Gram matrix must match the brute-force inner-product table
    # (and is the identity: the system is an orthonormal basis).
    w = ModelWindow(Q2, 1, 1)
    system = orthonormal_basis_system(w)
    assert len(system) == 4
    g = gram_matrix(system)
    brute = np.empty((4, 4), dtype=complex)
    for i in range(4):
        for l in range(4):
            brute[i, l] = inner_product(system.vector(l), system.vector(i))
    assert np.allclose(g, brute, atol=1e-14)
    assert np.allclose(g, np.eye(4), atol=1e-14)


def test_gram_hermitian_psd():
    w = ModelWindow(Q3, 1, 1)
    rng = np.random.default_rng(2)
    system = random_redundant_system(w, rng)
    g = gram_matrix(system)
    assert np.max(np.abs(g - g.conj().T)) < 1e-12
    assert np.min(np.linalg.eigvalsh(g)) > -1e-10


def test_frame_operator_quadratic_form():
    w = ModelWindow(Q2, 1, 1)
    rng = np.random.default_rng(3)
    system = random_redundant_system(w, rng)
    s = frame_operator(system)
    for _ in range(20):
        f = random_function(w, rng)
        direct = sum(
            abs(inner_product(f, system.vector(i))) ** 2 for i in range(len(system))
        )
        quad = w.weight * np.real(np.vdot(f.values, s @ f.values))
        assert quad == pytest.approx(direct, abs=1e-10)


def test_frame_operator_identity_for_onb():
    w = ModelWindow(Q2, 1, 1)
    system = orthonormal_basis_system(w)
    s = frame_operator(system)
    assert np.allclose(s, np.eye(w.dim), atol=1e-14)


def test_frame_operator_and_gram_share_spectrum():
    w = ModelWindow(Q2, 2, 1)
    rng = np.random.default_rng(4)
    system = random_redundant_system(w, rng)
    eig_s = np.sort(np.linalg.eigvalsh(frame_operator(system)))
    eig_g = np.sort(np.linalg.eigvalsh(gram_matrix(system)))
    k = min(len(eig_s), len(eig_g))
    assert np.allclose(eig_s[-k:][-w.dim :], eig_g[-k:][-w.dim :], atol=1e-8)


def test_frame_bounds_orthonormal_and_doubled():
    w = ModelWindow(Q2, 1, 1)
    onb = orthonormal_basis_system(w)
    fb = frame_bounds(onb)
    assert fb.A == pytest.approx(1.0, abs=1e-12)
    assert fb.B == pytest.approx(1.0, abs=1e-12)
    assert fb.is_frame
    doubled = VectorFamily(w, np.vstack([onb.matrix, onb.matrix]))
    fb2 = frame_bounds(doubled)
    assert fb2.A == pytest.approx(2.0, abs=1e-12)
    assert fb2.B == pytest.approx(2.0, abs=1e-12)


def test_frame_bounds_rayleigh_sandwich():
    # random 40-vector family in dimension 16
    w = ModelWindow(Q2, 2, 2)
    rng = np.random.default_rng(5)
    fam = VectorFamily(w, rng.standard_normal((40, 16)) + 1j * rng.standard_normal((40, 16)))
    fb = frame_bounds(fam)
    s = frame_operator(fam)
    eig = np.linalg.eigvalsh(s)
    assert fb.A == pytest.approx(eig[0], abs=1e-8)
    assert fb.B == pytest.approx(eig[-1], abs=1e-8)
    for _ in range(100):
        f = random_function(w, rng)
        quad = w.weight * np.real(np.vdot(f.values, s @ f.values))
        assert fb.A - 1e-8 <= quad <= fb.B + 1e-8


def test_bessel_bound_always_finite():
    w = ModelWindow(Q3, 1, 1)
    rng = np.random.default_rng(6)
    for _ in range(10):
        fam = VectorFamily(w, rng.standard_normal((5, w.dim)))
        assert np.isfinite(frame_bounds(fam).B)


def test_unitary_invariance_of_bounds():
    w = ModelWindow(Q2, 2, 2)
    rng = np.random.default_rng(7)
    system = random_redundant_system(ModelWindow(Q2, 1, 1), rng)
    base = ModelWindow(Q2, 1, 1)
    fb = frame_bounds(system)
    a = base.point(2)
    b = LocalFieldElement.prime(Q2, -1)
    translated = VectorFamily(base, np.stack([translate(system.vector(i), a).values for i in range(len(system))]))
    modulated = VectorFamily(base, np.stack([modulate(system.vector(i), b).values for i in range(len(system))]))
    dilated_vecs = [dilate(system.vector(i), 1) for i in range(len(system))]
    dilated = VectorFamily(dilated_vecs[0].window, np.stack([v.values for v in dilated_vecs]))
    for other in (translated, modulated, dilated):
        fb2 = frame_bounds(other)
        assert fb2.A == pytest.approx(fb.A, abs=1e-8)
        assert fb2.B == pytest.approx(fb.B, abs=1e-8)


def test_iterative_path_matches_dense():
    rng = np.random.default_rng(8)
    for trial in range(5):
        n, dim = 12 + trial, 16
        w = ModelWindow(Q2, 2, 2)
        fam = VectorFamily(w, rng.standard_normal((n, dim)) + 1j * rng.standard_normal((n, dim)))
        s = frame_operator(fam)
        eig = np.linalg.eigvalsh(s)
        assert power_iteration(s) == pytest.approx(eig[-1], abs=1e-6)
        assert inverse_iteration_min(s) == pytest.approx(eig[0], abs=1e-6)
    fb_it = frame_bounds(fam, method="iterative")
    fb_dense = frame_bounds(fam, method="dense")
    assert fb_it.A == pytest.approx(fb_dense.A, abs=1e-6)
    assert fb_it.B == pytest.approx(fb_dense.B, abs=1e-6)


def test_span_bounds_report_rank():
    w = ModelWindow(Q2, 2, 2)
    rng = np.random.default_rng(9)
    rows = rng.standard_normal((3, 16)) + 1j * rng.standard_normal((3, 16))
    fam = VectorFamily(w, rows)
    span_fb, rank = frame_bounds_span(fam)
    full_fb = frame_bounds(fam)
    assert rank == 3
    assert span_fb.is_frame
    assert not full_fb.is_frame  # 3 vectors cannot frame dimension 16
    assert span_fb.B == pytest.approx(full_fb.B, abs=1e-10)


def test_require_frame_for_span_rejects_ill_conditioned():
    # second singular value above the rank cut (1e-10) but below the frame
    # verdict threshold (1e-8 relative on eigenvalues)
    w = ModelWindow(Q2, 1, 1)
    v = np.array([1.0, 0.0, 0.0, 0.0], dtype=complex)
    u = np.array([0.0, 1.0, 0.0, 0.0], dtype=complex)
    fam = VectorFamily(w, np.stack([v, v + 1e-5 * u]))
    with pytest.raises(PreconditionError):
        require_frame_for_span(fam)
    # far below the rank cut the tiny direction is cropped: frame for rank-1 span
    nearly = VectorFamily(w, np.stack([v, v + 1e-12 * u]))
    _, basis = require_frame_for_span(nearly)
    assert basis.shape[1] == 1


def test_redundant_params_shape():
    w = ModelWindow(Q3, 1, 1)
    params = redundant_params(w)
    assert params.k_count == 9 and params.m_count == 3
    rng = np.random.default_rng(10)
    system = random_redundant_system(w, rng)
    assert len(system) == 27  # q * dim
    assert frame_bounds(system).is_frame
