"""Laurent-series arithmetic, the ultrametric absolute value, and the
textual element format."""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lfwp import (
    ExponentWindow,
    FieldSpec,
    LocalFieldElement,
    ParseError,
    WindowError,
    absolute_value,
    lf_mul,
    parse_element,
    to_text,
    valuation,
)

SPECS = {2: FieldSpec(2), 3: FieldSpec(3), 4: FieldSpec(2, 2), 9: FieldSpec(3, 2)}


def random_element(spec, rng, lo=-3, hi=3, density=0.6):
    terms = {}
    for k in range(lo, hi + 1):
        if rng.random() < density:
            terms[k] = spec.element(int(rng.integers(0, spec.q)))
    return LocalFieldElement.from_terms(spec, terms)


def test_additive_identity():
    spec = SPECS[4]
    x = LocalFieldElement.from_terms(spec, {-1: spec.epsilon(1), 2: 1})
    assert x + LocalFieldElement.zero(spec) == x


def test_char2_prime_cancels():
    p = LocalFieldElement.prime(SPECS[2])
    assert not (p + p)


def test_char2_square_of_one_plus_p():
    spec = SPECS[2]
    x = LocalFieldElement.one(spec) + LocalFieldElement.prime(spec)
    expected = LocalFieldElement.from_terms(spec, {0: 1, 2: 1})
    assert x * x == expected


def test_prime_inverse_powers():
    spec = SPECS[3]
    assert LocalFieldElement.prime(spec, 1) * LocalFieldElement.prime(spec, -1) == LocalFieldElement.one(spec)


def test_valuation_and_absolute_value():
    spec = SPECS[3]
    zero = LocalFieldElement.zero(spec)
    assert valuation(zero) == math.inf
    assert absolute_value(zero) == 0
    assert absolute_value(LocalFieldElement.prime(spec)) == Fraction(1, 3)
    assert absolute_value(LocalFieldElement.prime(spec, -2)) == 9


@pytest.mark.parametrize("q", sorted(SPECS))
def test_ultrametric_axioms_random(q):
    spec = SPECS[q]
    rng = np.random.default_rng(q)
    for _ in range(1000):
        x = random_element(spec, rng)
        y = random_element(spec, rng)
        assert absolute_value(x * y) == absolute_value(x) * absolute_value(y)
        bound = max(absolute_value(x), absolute_value(y))
        assert absolute_value(x + y) <= bound
        if absolute_value(x) != absolute_value(y):
            assert absolute_value(x + y) == bound


def test_valuation_adds_under_multiplication():
    spec = SPECS[9]
    rng = np.random.default_rng(0)
    for _ in range(200):
        x = random_element(spec, rng)
        y = random_element(spec, rng)
        if x and y:
            assert valuation(x * y) == valuation(x) + valuation(y)


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
@settings(max_examples=60, deadline=None)
def test_ring_laws_hypothesis(a, b, c):
    spec = SPECS[4]
    xs = [
        LocalFieldElement.from_terms(spec, {-1: n % 4, 0: (n * 7 + 1) % 4, 2: (n * 3) % 4})
        for n in (a, b, c)
    ]
    x, y, z = xs
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


def test_window_enforcement():
    spec = SPECS[2]
    x = LocalFieldElement.prime(spec, -2)
    y = LocalFieldElement.prime(spec, -1)
    window = ExponentWindow(-2, 2)
    assert window.contains(x)
    with pytest.raises(WindowError):
        lf_mul(x, y, window=window)
    assert lf_mul(x, y) == LocalFieldElement.prime(spec, -3)  # unwindowed is exact
    with pytest.raises(ValueError):
        ExponentWindow(3, 1)


def test_text_format_example():
    # "p^-2 + e1*p^0 + 2*p^1" needs p = 3, c = 2
    spec = SPECS[9]
    x = LocalFieldElement.from_terms(spec, {-2: 1, 0: spec.epsilon(1), 1: 2})
    assert to_text(x) == "p^-2 + e1*p^0 + 2*p^1"
    assert parse_element(spec, to_text(x)) == x


def test_text_roundtrip_random():
    rng = np.random.default_rng(42)
    for q, spec in SPECS.items():
        for _ in range(100):
            x = random_element(spec, rng, lo=-4, hi=4)
            assert parse_element(spec, to_text(x)) == x, to_text(x)


def test_text_multiterm_coefficient():
    spec = SPECS[4]
    x = LocalFieldElement.from_terms(spec, {0: spec.one() + spec.epsilon(1)})
    assert to_text(x) == "(1+e1)*p^0"
    assert parse_element(spec, "(1+e1)*p^0") == x


def test_parse_rejects_garbage():
    spec = SPECS[2]
    with pytest.raises(ParseError):
        parse_element(spec, "p^")
    with pytest.raises(ParseError):
        parse_element(spec, "q^2")
    with pytest.raises(ParseError):
        parse_element(spec, "2*p^0")  # scalar 2 out of range in GF(2)
    with pytest.raises(ParseError):
        parse_element(spec, "e1*p^0")  # no e1 when c = 1
