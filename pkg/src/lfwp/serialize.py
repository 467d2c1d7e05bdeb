"""File formats: function CSV, Hermitian matrix CSV, and JSON reports.

Functions serialize as "index,re,im" rows plus a sidecar metadata record
(<path>.meta.json) carrying the field, window, and enumeration version.
Matrices serialize as the upper triangle in "row,col,re,im" form with a
matching sidecar.  Floats are written with repr, which round-trips every
64-bit value exactly.  All writes are atomic (tmp file + rename).
"""

from __future__ import annotations

import json
import os
from pathlib import Path

import numpy as np

from .errors import ParseError, SpecMismatchError
from .gf import FieldSpec
from .model import ENUMERATION_VERSION, ModelWindow, SampledFunction

FORMAT_VERSION = 1


def atomic_write_text(path: Path, text: str) -> None:
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


def dumps_stable(obj) -> str:
    """Deterministic JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _meta_path(path: Path) -> Path:
    path = Path(path)
    return path.with_name(path.name + ".meta.json")


def _window_meta(window: ModelWindow) -> dict:
    return {
        "formatVersion": FORMAT_VERSION,
        "p": window.spec.p,
        "c": window.spec.c,
        "modulus": list(window.spec.modulus),
        "M": window.M,
        "N": window.N,
        "enumeration": ENUMERATION_VERSION,
    }


def _window_from_meta(meta: dict, path: Path) -> ModelWindow:
    try:
        spec = FieldSpec(meta["p"], meta["c"], tuple(meta["modulus"]))
        window = ModelWindow(spec, meta["M"], meta["N"])
    except (KeyError, ValueError, TypeError) as exc:
        raise ParseError(f"{path}: bad metadata sidecar ({exc})") from exc
    if meta.get("enumeration") != ENUMERATION_VERSION:
        raise ParseError(
            f"{path}: enumeration {meta.get('enumeration')!r} not supported"
        )
    return window


def load_meta(path: Path) -> dict:
    meta_file = _meta_path(path)
    if not meta_file.exists():
        raise ParseError(f"{path}: missing metadata sidecar {meta_file.name}")
    try:
        return json.loads(meta_file.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{meta_file}: {exc.msg}", offset=exc.pos) from exc


def save_function(f: SampledFunction, path: Path) -> list[Path]:
    path = Path(path)
    lines = ["index,re,im"]
    for i, v in enumerate(f.values):
        lines.append(f"{i},{float(v.real)!r},{float(v.imag)!r}")
    atomic_write_text(path, "\n".join(lines) + "\n")
    meta = _window_meta(f.window)
    meta["kind"] = "function"
    atomic_write_text(_meta_path(path), dumps_stable(meta))
    return [path, _meta_path(path)]


def _parse_csv_rows(path: Path, expected_fields: int):
    """Yield (offset, line_number, fields); offsets are byte positions."""
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not valid UTF-8", offset=exc.start) from exc
    offset = 0
    for lineno, line in enumerate(text.splitlines(keepends=True)):
        stripped = line.rstrip("\r\n")
        if lineno == 0 or not stripped:
            offset += len(line.encode("utf-8"))
            continue
        fields = stripped.split(",")
        if len(fields) != expected_fields:
            raise ParseError(
                f"{path}: line {lineno + 1}: expected {expected_fields} fields, "
                f"got {len(fields)}",
                offset=offset,
            )
        yield offset, lineno, fields
        offset += len(line.encode("utf-8"))


def load_function(path: Path) -> SampledFunction:
    path = Path(path)
    meta = load_meta(path)
    if meta.get("kind") != "function":
        raise ParseError(f"{path}: sidecar kind {meta.get('kind')!r} is not 'function'")
    window = _window_from_meta(meta, path)
    values = np.zeros(window.dim, dtype=np.complex128)
    seen = np.zeros(window.dim, dtype=bool)
    for offset, lineno, fields in _parse_csv_rows(path, 3):
        try:
            idx = int(fields[0])
            re, im = float(fields[1]), float(fields[2])
        except ValueError as exc:
            raise ParseError(f"{path}: line {lineno + 1}: {exc}", offset=offset) from exc
        if not 0 <= idx < window.dim:
            raise ParseError(
                f"{path}: line {lineno + 1}: index {idx} out of range", offset=offset
            )
        values[idx] = complex(re, im)
        seen[idx] = True
    if not seen.all():
        raise ParseError(f"{path}: {int((~seen).sum())} grid values missing")
    return SampledFunction(window, values)


def save_matrix(matrix: np.ndarray, window: ModelWindow, path: Path, kind: str = "gram") -> list[Path]:
    """Upper triangle of a Hermitian matrix as row,col,re,im."""
    matrix = np.asarray(matrix)
    n = matrix.shape[0]
    if matrix.shape != (n, n):
        raise SpecMismatchError(f"matrix must be square, got {matrix.shape}")
    lines = ["row,col,re,im"]
    for i in range(n):
        for j in range(i, n):
            v = matrix[i, j]
            lines.append(f"{i},{j},{float(v.real)!r},{float(v.imag)!r}")
    path = Path(path)
    atomic_write_text(path, "\n".join(lines) + "\n")
    meta = _window_meta(window)
    meta["kind"] = "matrix"
    meta["matrixKind"] = kind
    meta["size"] = n
    atomic_write_text(_meta_path(path), dumps_stable(meta))
    return [path, _meta_path(path)]


def load_matrix(path: Path) -> tuple[np.ndarray, dict]:
    path = Path(path)
    meta = load_meta(path)
    if meta.get("kind") != "matrix":
        raise ParseError(f"{path}: sidecar kind {meta.get('kind')!r} is not 'matrix'")
    n = int(meta.get("size", 0))
    matrix = np.zeros((n, n), dtype=np.complex128)
    for offset, lineno, fields in _parse_csv_rows(path, 4):
        try:
            i, j = int(fields[0]), int(fields[1])
            v = complex(float(fields[2]), float(fields[3]))
        except ValueError as exc:
            raise ParseError(f"{path}: line {lineno + 1}: {exc}", offset=offset) from exc
        if not (0 <= i < n and i <= j < n):
            raise ParseError(
                f"{path}: line {lineno + 1}: ({i},{j}) outside upper triangle",
                offset=offset,
            )
        matrix[i, j] = v
        if i != j:
            matrix[j, i] = np.conj(v)
    return matrix, meta
