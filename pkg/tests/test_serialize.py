"""Round-trip fidelity of the function and matrix file formats."""

import numpy as np
import pytest

from lfwp import FieldSpec, ModelWindow, ParseError, indicator_of_integers, random_function
from lfwp.serialize import load_function, load_matrix, load_meta, save_function, save_matrix


def test_function_roundtrip_exact(tmp_path):
    w = ModelWindow(FieldSpec(3, 2), 1, 1)
    rng = np.random.default_rng(0)
    f = random_function(w, rng)
    path = tmp_path / "f.csv"
    save_function(f, path)
    g = load_function(path)
    assert g.window == w
    assert np.array_equal(g.values, f.values)  # bit-exact for 64-bit values


def test_function_metadata_contents(tmp_path):
    w = ModelWindow(FieldSpec(2, 2), 2, 1)
    path = tmp_path / "f.csv"
    save_function(indicator_of_integers(w), path)
    meta = load_meta(path)
    assert meta["p"] == 2 and meta["c"] == 2
    assert meta["modulus"] == [1, 1, 1]
    assert meta["M"] == 2 and meta["N"] == 1
    assert meta["enumeration"] == "mixed-radix-v1"
    assert meta["kind"] == "function"


def test_function_requires_sidecar(tmp_path):
    path = tmp_path / "orphan.csv"
    path.write_text("index,re,im\n0,1.0,0.0\n")
    with pytest.raises(ParseError, match="sidecar"):
        load_function(path)


def test_truncated_function_reports_offset(tmp_path):
    w = ModelWindow(FieldSpec(2), 1, 1)
    path = tmp_path / "f.csv"
    save_function(indicator_of_integers(w), path)
    text = path.read_text()
    lines = text.splitlines()
    lines[2] = "1,0.5"  # drop a field
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(ParseError) as err:
        load_function(path)
    assert err.value.offset == len((lines[0] + "\n" + lines[1] + "\n").encode())


def test_missing_rows_detected(tmp_path):
    w = ModelWindow(FieldSpec(2), 1, 1)
    path = tmp_path / "f.csv"
    save_function(indicator_of_integers(w), path)
    lines = path.read_text().splitlines()
    path.write_text("\n".join(lines[:-1]) + "\n")
    with pytest.raises(ParseError, match="missing"):
        load_function(path)


def test_matrix_roundtrip(tmp_path):
    w = ModelWindow(FieldSpec(2), 1, 1)
    rng = np.random.default_rng(1)
    a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    h = a @ a.conj().T
    path = tmp_path / "gram.csv"
    save_matrix(h, w, path, kind="gram")
    back, meta = load_matrix(path)
    assert meta["matrixKind"] == "gram"
    assert np.array_equal(back, np.triu(h) + np.triu(h, 1).conj().T)
    assert np.allclose(back, h, atol=0)  # Hermitian reconstruction is exact
