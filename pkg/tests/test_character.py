"""The canonical character and the translation map u(n): every check here
is exact integer arithmetic, no floating tolerance."""

import itertools

import numpy as np
import pytest

from lfwp import (
    ExponentWindow,
    FieldSpec,
    LocalFieldElement,
    ModelWindow,
    WindowError,
    character,
    character_at,
    u_map,
)

SPECS = [FieldSpec(2), FieldSpec(3), FieldSpec(2, 2), FieldSpec(2, 3), FieldSpec(3, 2), FieldSpec(5)]


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: f"q{s.q}")
def test_trivial_on_integers(spec):
    # every element supported in exponents >= 0 lies in D
    for code in range(spec.q):
        x = LocalFieldElement.from_terms(spec, {0: code, 1: 1, 3: code})
        assert character(x).is_one


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: f"q{s.q}")
def test_nontrivial_on_inverse_prime_ideal(spec):
    x = LocalFieldElement.prime(spec, -1)
    assert character(x).exponent == 1
    assert not character(x).is_one


def test_higher_basis_directions_trivial():
    spec = FieldSpec(2, 2)
    x = LocalFieldElement.from_terms(spec, {-1: spec.epsilon(1)})
    assert character(x).is_one


@pytest.mark.parametrize("spec", SPECS[:4], ids=lambda s: f"q{s.q}")
def test_character_additivity_all_grid_pairs(spec):
    window = ModelWindow(spec, 1, 1)
    points = list(window.points())
    for x, y in itertools.product(points, points):
        lhs = character(x + y)
        rhs = character(x) * character(y)
        assert lhs.exponent == rhs.exponent


def test_character_at_degenerate_and_identity():
    spec = FieldSpec(3)
    zero = LocalFieldElement.zero(spec)
    one = LocalFieldElement.one(spec)
    rng = np.random.default_rng(0)
    window = ModelWindow(spec, 2, 1)
    for _ in range(50):
        x = window.point(int(rng.integers(0, window.dim)))
        assert character_at(zero, x).is_one
        assert character_at(one, x).exponent == character(x).exponent


def test_character_at_symmetric():
    spec = FieldSpec(2, 2)
    window = ModelWindow(spec, 1, 1)
    points = list(window.points())
    for x, y in itertools.product(points, points):
        assert character_at(y, x).exponent == character_at(x, y).exponent


def test_u_map_base_values():
    spec = FieldSpec(2)
    p_inv = LocalFieldElement.prime(spec, -1)
    assert not u_map(spec, 0)
    assert u_map(spec, 1) == p_inv
    assert u_map(spec, 2) == LocalFieldElement.prime(spec, -2)
    assert u_map(spec, 3) == LocalFieldElement.prime(spec, -2) + p_inv


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: f"q{s.q}")
def test_u_map_shift_identity(spec):
    # u(r q^k + s) = u(r) p^-k + u(s) for all r < q^2, k <= 2, s < q^k
    q = spec.q
    for k in range(3):
        for r in range(q**2):
            for s in range(q**k):
                lhs = u_map(spec, r * q**k + s)
                rhs = u_map(spec, r).shift(-k) + u_map(spec, s)
                assert lhs == rhs


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: f"q{s.q}")
def test_u_map_enumerates_cosets(spec):
    # {u(n): n < q^k} are distinct mod D and enumerate p^-k D / D exactly
    q = spec.q
    for k in range(1, 4):
        seen = set()
        for n in range(q**k):
            u = u_map(spec, n)
            assert (not u) or (-k <= u.lo and u.hi <= -1)
            digits = tuple(u.coeff(-i).to_int() for i in range(1, k + 1))
            seen.add(digits)
        assert len(seen) == q**k


def test_u_map_window_error():
    spec = FieldSpec(2)
    window = ExponentWindow(-2, 2)
    u_map(spec, 3, window=window)
    with pytest.raises(WindowError):
        u_map(spec, 4, window=window)  # u(4) = p^-3
    with pytest.raises(ValueError):
        u_map(spec, -1)
