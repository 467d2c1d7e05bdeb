"""GF(q) arithmetic: exhaustive field axioms and frozen small-field values."""

import pytest

from lfwp import FieldSpec, SpecMismatchError

FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)]  # q = 2,3,4,5,8,9


@pytest.fixture(params=FIELDS, ids=lambda pc: f"GF({pc[0]**pc[1]})")
def spec(request):
    p, c = request.param
    return FieldSpec(p, c)


def test_field_axioms_exhaustive(spec):
    elems = list(spec.elements())
    zero, one = spec.zero(), spec.one()
    for x in elems:
        assert x + zero == x
        assert x * one == x
        assert x + (-x) == zero
        if x:
            assert x * x.inverse() == one
    for x in elems:
        for y in elems:
            assert x + y == y + x
            assert x * y == y * x
            for z in elems:
                assert (x + y) + z == x + (y + z)
                assert (x * y) * z == x * (y * z)
                assert x * (y + z) == x * y + x * z


def test_int_code_roundtrip(spec):
    for code in range(spec.q):
        assert spec.element(code).to_int() == code


def test_characteristic_two_cancellation():
    gf2 = FieldSpec(2)
    assert gf2.element(1) + gf2.element(1) == gf2.zero()
    gf4 = FieldSpec(2, 2)
    e1 = gf4.epsilon(1)
    assert e1 + e1 == gf4.zero()


def test_gf3_arithmetic():
    gf3 = FieldSpec(3)
    assert (gf3.element(1) + gf3.element(2)) == gf3.zero()
    assert (gf3.element(2) * gf3.element(2)) == gf3.one()


def test_gf4_generator_square():
    # modulus x^2 + x + 1: e1 * e1 = e1 + 1
    gf4 = FieldSpec(2, 2)
    e1 = gf4.epsilon(1)
    assert e1 * e1 == e1 + gf4.one()


def test_mismatched_specs_rejected():
    with pytest.raises(SpecMismatchError):
        FieldSpec(2).element(1) + FieldSpec(3).element(1)
    # same (p, c) but different modulus is a different field presentation
    with pytest.raises(SpecMismatchError):
        FieldSpec(3, 2, (1, 0, 1)).element(1) * FieldSpec(3, 2, (2, 2, 1)).element(1)


def test_invalid_constructions():
    with pytest.raises(ValueError):
        FieldSpec(4)  # composite characteristic
    with pytest.raises(ValueError):
        FieldSpec(2, 2, (1, 0, 1))  # x^2 + 1 = (x+1)^2 over GF(2)
    with pytest.raises(ValueError):
        FieldSpec(2, 0)
    with pytest.raises(ValueError):
        FieldSpec(2, 2, (1, 1, 0, 1))  # degree 3 != c


def test_epsilon_basis():
    gf8 = FieldSpec(2, 3)
    assert gf8.epsilon(0) == gf8.one()
    assert gf8.epsilon(1).coeffs == (0, 1, 0)
    with pytest.raises(ValueError):
        gf8.epsilon(3)
