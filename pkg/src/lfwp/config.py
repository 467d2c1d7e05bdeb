"""Experiment configuration: one JSON document, validated with path-precise
errors and stable machine-readable codes.

Top-level shape (see CONFIG_SCHEMA for the published description):

    {
      "schemaVersion": 1,
      "field":       {"p": 2, "c": 1, "modulus": [0, 1]?},
      "window":      {"M": 1, "N": 1},
      "generator":   {"kind": "indicator" | "random" | "file", ...},
      "system":      {"a": "p^0", "b": "p^0", "jRange": [0, 0],
                      "kCount": 2, "mCount": 2},
      "combination": {"kind": "none" | "partition" | "matrix" | "finite-sum", ...},
      "checks":      ["frame_bounds", ...],
      "tolerances":  {"frameTol": 1e-8, "floatTol": 1e-10},
      "output":      {"directory": "out", "formats": ["json", "csv"]}
    }
"""

from __future__ import annotations

import copy
import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigError
from .gf import FieldSpec
from .laurent import LocalFieldElement, parse_element
from .errors import ParseError
from .model import ModelWindow

SCHEMA_VERSION = 1

# error codes (stable identifiers, one per rejection class)
E_SCHEMA = "E_SCHEMA"        # structural problem / unknown schema version
E_VALUE = "E_VALUE"          # a field has the wrong type or range
E_PRIME = "E_PRIME"          # p is not prime
E_MODULUS = "E_MODULUS"      # modulus reducible / wrong degree
E_WINDOW = "E_WINDOW"        # negative window exponents or bad dilations
E_ELEMENT = "E_ELEMENT"      # unparseable field element text
E_PARTITION = "E_PARTITION"  # overlapping or non-covering partition
E_CHECKS = "E_CHECKS"        # check incompatible with the combination kind
E_FILE = "E_FILE"            # referenced file missing
E_CAP = "E_CAP"              # sweep instance cap exceeded

CHECK_IDS = (
    "frame_bounds",
    "theorem_2_1",
    "theorem_2_2",
    "theorem_2_3",
    "theorem_2_4",
    "theorem_2_5",
    "corollary_2_6",
    "remark_2_7",
)

CHECK_REQUIRES = {
    "frame_bounds": None,
    "theorem_2_1": "partition",
    "theorem_2_2": "partition",
    "theorem_2_3": "matrix",
    "theorem_2_4": "finite-sum",
    "theorem_2_5": "finite-sum",
    "corollary_2_6": "finite-sum",
    "remark_2_7": "finite-sum",
}

DEFAULT_SWEEP_CAP = 4096


@dataclass(frozen=True)
class GeneratorConfig:
    kind: str
    seed: int = 0
    path: str | None = None
    window: tuple[int, int] | None = None  # (M, N); defaults to the ambient window


@dataclass(frozen=True)
class SystemConfig:
    a: LocalFieldElement
    b: LocalFieldElement
    j_range: tuple[int, int]
    k_count: int
    m_count: int


@dataclass(frozen=True)
class ExperimentConfig:
    spec: FieldSpec
    window: ModelWindow
    generator: GeneratorConfig
    system: SystemConfig
    combination: dict
    checks: tuple[str, ...]
    frame_tol: float
    float_tol: float
    out_dir: str
    formats: tuple[str, ...]
    raw: dict = field(repr=False)


@dataclass(frozen=True)
class SweepSpec:
    base: dict
    axes: tuple[tuple[str, tuple], ...]
    instances_per_point: int
    seed_base: int
    cap: int
    out_dir: str
    raw: dict = field(repr=False)


def _need(data: dict, key: str, path: str, kind=None):
    if not isinstance(data, dict) or key not in data:
        raise ConfigError(E_SCHEMA, f"{path}.{key}", "missing required field")
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise ConfigError(E_VALUE, f"{path}.{key}", f"expected {kind.__name__}")
    return value


def _opt(data: dict, key: str, default=None):
    return data.get(key, default) if isinstance(data, dict) else default


def _int_field(data, key, path, minimum=None):
    value = _need(data, key, path)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(E_VALUE, f"{path}.{key}", "expected an integer")
    if minimum is not None and value < minimum:
        raise ConfigError(E_VALUE, f"{path}.{key}", f"must be >= {minimum}")
    return value


def _build_field_spec(data: dict, path: str) -> FieldSpec:
    p = _int_field(data, "p", path, minimum=2)
    c = data.get("c", 1)
    if isinstance(c, bool) or not isinstance(c, int) or c < 1:
        raise ConfigError(E_VALUE, f"{path}.c", "expected a positive integer")
    modulus = data.get("modulus")
    from .gf import is_prime

    if not is_prime(p):
        raise ConfigError(E_PRIME, f"{path}.p", f"{p} is not prime")
    try:
        return FieldSpec(p, c, tuple(modulus) if modulus is not None else None)
    except ValueError as exc:
        raise ConfigError(E_MODULUS, f"{path}.modulus", str(exc)) from exc


def _build_window(spec: FieldSpec, data: dict, path: str) -> ModelWindow:
    m = _int_field(data, "M", path)
    n = _int_field(data, "N", path)
    if m < 0 or n < 0:
        raise ConfigError(E_WINDOW, path, f"window exponents must be nonnegative, got ({m}, {n})")
    return ModelWindow(spec, m, n)


def _parse_element_field(spec: FieldSpec, data: dict, key: str, path: str) -> LocalFieldElement:
    text = _need(data, key, path, str)
    try:
        return parse_element(spec, text)
    except ParseError as exc:
        raise ConfigError(E_ELEMENT, f"{path}.{key}", f"cannot parse {text!r}: {exc}") from exc


def _validate_generator(data: dict, spec: FieldSpec, path: str, base_dir: Path) -> GeneratorConfig:
    kind = _need(data, "kind", path, str)
    if kind not in ("indicator", "random", "file"):
        raise ConfigError(E_VALUE, f"{path}.kind", f"unknown generator kind {kind!r}")
    seed = data.get("seed", 0)
    if isinstance(seed, bool) or not isinstance(seed, int):
        raise ConfigError(E_VALUE, f"{path}.seed", "expected an integer seed")
    gen_path = None
    if kind == "file":
        gen_path = _need(data, "path", path, str)
        resolved = (base_dir / gen_path) if not Path(gen_path).is_absolute() else Path(gen_path)
        if not resolved.exists():
            raise ConfigError(E_FILE, f"{path}.path", f"file {resolved} does not exist")
        gen_path = str(resolved)
    window = None
    if "window" in data:
        m = _int_field(data["window"], "M", f"{path}.window")
        n = _int_field(data["window"], "N", f"{path}.window")
        if m < 0 or n < 0:
            raise ConfigError(E_WINDOW, f"{path}.window", "window exponents must be nonnegative")
        window = (m, n)
    return GeneratorConfig(kind=kind, seed=seed, path=gen_path, window=window)


def _validate_system(data: dict, spec: FieldSpec, path: str) -> SystemConfig:
    a = _parse_element_field(spec, data, "a", path)
    b = _parse_element_field(spec, data, "b", path)
    j_range = _need(data, "jRange", path, list)
    if len(j_range) != 2 or not all(isinstance(j, int) and not isinstance(j, bool) for j in j_range):
        raise ConfigError(E_VALUE, f"{path}.jRange", "expected [jLow, jHigh]")
    if j_range[0] > j_range[1]:
        raise ConfigError(E_VALUE, f"{path}.jRange", "jLow must be <= jHigh")
    k_count = _int_field(data, "kCount", path, minimum=1)
    m_count = _int_field(data, "mCount", path, minimum=1)
    return SystemConfig(a=a, b=b, j_range=(j_range[0], j_range[1]), k_count=k_count, m_count=m_count)


def _label_from_key(key, path: str):
    parts = str(key).split(",")
    if len(parts) != 3:
        raise ConfigError(E_VALUE, path, f"label key {key!r} is not 'j,k,m'")
    try:
        return tuple(int(x) for x in parts)
    except ValueError as exc:
        raise ConfigError(E_VALUE, path, f"label key {key!r} is not 'j,k,m'") from exc


def _system_labels(system: SystemConfig):
    lo, hi = system.j_range
    return tuple(
        (j, k, m)
        for j in range(lo, hi + 1)
        for k in range(system.k_count)
        for m in range(system.m_count)
    )


def _validate_partition_payload(data: dict, labels, path: str) -> None:
    blocks = _need(data, "blocks", path, dict)
    bkind = _need(blocks, "kind", f"{path}.blocks", str)
    if bkind == "explicit":
        from .combinations import IndexPartition
        from .errors import SpecMismatchError

        raw_blocks = _need(blocks, "blocks", f"{path}.blocks", list)
        try:
            parsed = IndexPartition.from_blocks(
                (tuple(b["label"]), tuple(tuple(m) for m in b["members"])) for b in raw_blocks
            )
            parsed.validate_for(labels)
        except (KeyError, TypeError) as exc:
            raise ConfigError(E_VALUE, f"{path}.blocks.blocks", f"malformed block: {exc}") from exc
        except SpecMismatchError as exc:
            raise ConfigError(E_PARTITION, f"{path}.blocks.blocks", str(exc)) from exc
    elif bkind == "pairs":
        pass
    elif bkind == "urns":
        _int_field(blocks, "urns", f"{path}.blocks", minimum=1)
    else:
        raise ConfigError(E_VALUE, f"{path}.blocks.kind", f"unknown blocks kind {bkind!r}")
    coeffs = _need(data, "coefficients", path, dict)
    ckind = _need(coeffs, "kind", f"{path}.coefficients", str)
    if ckind == "explicit":
        values = _need(coeffs, "values", f"{path}.coefficients", dict)
        parsed_labels = {_label_from_key(k, f"{path}.coefficients.values") for k in values}
        if parsed_labels != set(labels):
            raise ConfigError(
                E_VALUE, f"{path}.coefficients.values", "coefficients must cover every label exactly"
            )
        for key, pair in values.items():
            if not (isinstance(pair, list) and len(pair) == 2
                    and all(isinstance(x, (int, float)) for x in pair)):
                raise ConfigError(
                    E_VALUE, f"{path}.coefficients.values.{key}", "expected [re, im]"
                )
    elif ckind == "logUniform":
        lo = _opt(coeffs, "low", 0.1)
        hi = _opt(coeffs, "high", 10.0)
        if not (isinstance(lo, (int, float)) and isinstance(hi, (int, float)) and 0 < lo <= hi):
            raise ConfigError(E_VALUE, f"{path}.coefficients", "need 0 < low <= high")
    else:
        raise ConfigError(E_VALUE, f"{path}.coefficients.kind", f"unknown kind {ckind!r}")


def _validate_matrix_payload(data: dict, labels, path: str) -> None:
    matrix = _need(data, "matrix", path, dict)
    mkind = _need(matrix, "kind", f"{path}.matrix", str)
    if mkind == "explicit":
        entries = _need(matrix, "entries", f"{path}.matrix", list)
        n = len(labels)
        if len(entries) == 0:
            raise ConfigError(E_VALUE, f"{path}.matrix.entries", "matrix has no rows")
        for i, row in enumerate(entries):
            if not isinstance(row, list) or len(row) != n:
                raise ConfigError(
                    E_VALUE, f"{path}.matrix.entries.{i}", f"expected {n} [re, im] entries"
                )
            for j, entry in enumerate(row):
                if not (isinstance(entry, list) and len(entry) == 2
                        and all(isinstance(x, (int, float)) for x in entry)):
                    raise ConfigError(
                        E_VALUE, f"{path}.matrix.entries.{i}.{j}", "expected [re, im]"
                    )
    elif mkind == "diagonalDominant":
        pass
    else:
        raise ConfigError(E_VALUE, f"{path}.matrix.kind", f"unknown matrix kind {mkind!r}")


def _validate_finite_sum_payload(data: dict, path: str) -> None:
    count = _int_field(data, "count", path, minimum=1)
    alphas = _need(data, "alphas", path, dict)
    akind = _need(alphas, "kind", f"{path}.alphas", str)
    if akind == "explicit":
        values = _need(alphas, "values", f"{path}.alphas", list)
        if len(values) != count:
            raise ConfigError(E_VALUE, f"{path}.alphas.values", f"expected {count} values")
        if not all(isinstance(v, (int, float)) and v > 0 for v in values):
            raise ConfigError(E_VALUE, f"{path}.alphas.values", "alphas must be positive reals")
    elif akind == "logUniform":
        boost = _opt(alphas, "boostIndex")
        if boost is not None and (not isinstance(boost, int) or not 0 <= boost < count):
            raise ConfigError(E_VALUE, f"{path}.alphas.boostIndex", "index out of range")
    else:
        raise ConfigError(E_VALUE, f"{path}.alphas.kind", f"unknown kind {akind!r}")
    p = _opt(data, "p", 0)
    if not isinstance(p, int) or not 0 <= p < count:
        raise ConfigError(E_VALUE, f"{path}.p", f"p must be an index in [0, {count})")
    generators = _opt(data, "generators", "random")
    if generators not in ("random", "same"):
        raise ConfigError(E_VALUE, f"{path}.generators", "expected 'random' or 'same'")


def validate_config(data: dict, base_dir: Path | str = ".") -> ExperimentConfig:
    base_dir = Path(base_dir)
    if not isinstance(data, dict):
        raise ConfigError(E_SCHEMA, "$", "config must be a JSON object")
    version = _need(data, "schemaVersion", "$")
    if version != SCHEMA_VERSION:
        raise ConfigError(E_SCHEMA, "$.schemaVersion", f"unsupported schema version {version}")
    spec = _build_field_spec(_need(data, "field", "$", dict), "$.field")
    window = _build_window(spec, _need(data, "window", "$", dict), "$.window")
    generator = _validate_generator(_need(data, "generator", "$", dict), spec, "$.generator", base_dir)
    system = _validate_system(_need(data, "system", "$", dict), spec, "$.system")

    gen_window = generator.window or (window.M, window.N)
    for j in range(system.j_range[0], system.j_range[1] + 1):
        gm, gn = gen_window
        if gm - j < 0 or gn + j < 0 or gm - j > window.M or gn + j > window.N:
            raise ConfigError(
                E_WINDOW,
                "$.system.jRange",
                f"dilation j={j} moves generator window ({gm}, {gn}) outside "
                f"the ambient ({window.M}, {window.N})",
            )

    combination = _need(data, "combination", "$", dict)
    kind = _need(combination, "kind", "$.combination", str)
    labels = _system_labels(system)
    if kind == "none":
        pass
    elif kind == "partition":
        _validate_partition_payload(combination, labels, "$.combination")
    elif kind == "matrix":
        _validate_matrix_payload(combination, labels, "$.combination")
    elif kind == "finite-sum":
        _validate_finite_sum_payload(combination, "$.combination")
    else:
        raise ConfigError(E_VALUE, "$.combination.kind", f"unknown combination kind {kind!r}")

    checks = _need(data, "checks", "$", list)
    if not checks:
        raise ConfigError(E_VALUE, "$.checks", "at least one check is required")
    for i, check in enumerate(checks):
        if check not in CHECK_IDS:
            raise ConfigError(E_CHECKS, f"$.checks.{i}", f"unknown check {check!r}")
        required = CHECK_REQUIRES[check]
        if required is not None and kind != required:
            raise ConfigError(
                E_CHECKS,
                f"$.checks.{i}",
                f"{check} requires combination kind {required!r}, got {kind!r}",
            )

    tolerances = _opt(data, "tolerances", {}) or {}
    frame_tol = tolerances.get("frameTol", 1e-8)
    float_tol = tolerances.get("floatTol", 1e-10)
    for name, value in (("frameTol", frame_tol), ("floatTol", float_tol)):
        if not isinstance(value, (int, float)) or value <= 0:
            raise ConfigError(E_VALUE, f"$.tolerances.{name}", "must be a positive number")

    output = _opt(data, "output", {}) or {}
    out_dir = output.get("directory", "out")
    formats = tuple(output.get("formats", ["json"]))
    for i, fmt in enumerate(formats):
        if fmt not in ("json", "csv"):
            raise ConfigError(E_VALUE, f"$.output.formats.{i}", f"unknown format {fmt!r}")
    if "json" not in formats:
        formats = ("json",) + formats

    return ExperimentConfig(
        spec=spec,
        window=window,
        generator=generator,
        system=system,
        combination=combination,
        checks=tuple(checks),
        frame_tol=float(frame_tol),
        float_tol=float(float_tol),
        out_dir=str(out_dir),
        formats=formats,
        raw=copy.deepcopy(data),
    )


def load_config(path: Path | str) -> ExperimentConfig:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise ConfigError(E_FILE, "$", f"config file {path} does not exist") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg} at line {exc.lineno}", offset=exc.pos) from exc
    return validate_config(data, base_dir=path.parent)


# -- sweep specs ----------------------------------------------------------------


def set_by_path(data: dict, dotted: str, value) -> None:
    """Assign into a nested dict/list structure by a dotted path."""
    parts = dotted.split(".")
    target = data
    for i, part in enumerate(parts[:-1]):
        key = int(part) if isinstance(target, list) else part
        try:
            target = target[key]
        except (KeyError, IndexError, TypeError) as exc:
            raise ConfigError(E_VALUE, dotted, f"path segment {part!r} not found") from exc
    last = parts[-1]
    key = int(last) if isinstance(target, list) else last
    try:
        target[key]
    except (KeyError, IndexError, TypeError) as exc:
        raise ConfigError(E_VALUE, dotted, f"path segment {last!r} not found") from exc
    target[key] = value


def validate_sweep(data: dict, base_dir: Path | str = ".") -> SweepSpec:
    base_dir = Path(base_dir)
    if not isinstance(data, dict):
        raise ConfigError(E_SCHEMA, "$", "sweep spec must be a JSON object")
    version = _need(data, "schemaVersion", "$")
    if version != SCHEMA_VERSION:
        raise ConfigError(E_SCHEMA, "$.schemaVersion", f"unsupported schema version {version}")
    base = _need(data, "base", "$")
    if isinstance(base, str):
        base_path = (base_dir / base) if not Path(base).is_absolute() else Path(base)
        if not base_path.exists():
            raise ConfigError(E_FILE, "$.base", f"base config {base_path} does not exist")
        base = json.loads(base_path.read_text(encoding="utf-8"))
    if not isinstance(base, dict):
        raise ConfigError(E_VALUE, "$.base", "base must be a config object or a path")
    validate_config(base, base_dir=base_dir)

    axes_raw = _opt(data, "axes", []) or []
    axes = []
    for i, axis in enumerate(axes_raw):
        path = _need(axis, "path", f"$.axes.{i}", str)
        values = _need(axis, "values", f"$.axes.{i}", list)
        if not values:
            raise ConfigError(E_VALUE, f"$.axes.{i}.values", "axis needs at least one value")
        probe = copy.deepcopy(base)
        set_by_path(probe, path, values[0])
        validate_config(probe, base_dir=base_dir)
        axes.append((path, tuple(values)))

    instances = data.get("instancesPerPoint", 1)
    if isinstance(instances, bool) or not isinstance(instances, int) or instances < 1:
        raise ConfigError(E_VALUE, "$.instancesPerPoint", "expected a positive integer")
    seed_base = data.get("seedBase", 0)
    if isinstance(seed_base, bool) or not isinstance(seed_base, int):
        raise ConfigError(E_VALUE, "$.seedBase", "expected an integer")
    cap = data.get("cap", DEFAULT_SWEEP_CAP)
    if isinstance(cap, bool) or not isinstance(cap, int) or cap < 1:
        raise ConfigError(E_VALUE, "$.cap", "expected a positive integer")

    total = instances
    for _, values in axes:
        total *= len(values)
    if total > cap:
        raise ConfigError(
            E_CAP, "$", f"sweep would run {total} instances; raise cap to at least {total}"
        )

    out_dir = (_opt(data, "output", {}) or {}).get("directory", "sweep-out")
    return SweepSpec(
        base=base,
        axes=tuple(axes),
        instances_per_point=instances,
        seed_base=seed_base,
        cap=cap,
        out_dir=str(out_dir),
        raw=copy.deepcopy(data),
    )


def load_sweep(path: Path | str) -> SweepSpec:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise ConfigError(E_FILE, "$", f"sweep file {path} does not exist") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg} at line {exc.lineno}", offset=exc.pos) from exc
    return validate_sweep(data, base_dir=path.parent)


CONFIG_SCHEMA = {
    "schemaVersion": SCHEMA_VERSION,
    "experiment": {
        "schemaVersion": "int, must equal the library schema version",
        "field": {
            "p": "prime characteristic",
            "c": "extension degree (default 1); q = p^c",
            "modulus": "optional monic irreducible coefficients, low degree first",
        },
        "window": {"M": "support exponent >= 0", "N": "resolution exponent >= 0"},
        "generator": {
            "kind": "indicator | random | file",
            "seed": "int, base seed for kind=random and any random combination parts",
            "path": "function CSV (kind=file)",
            "window": "optional {M, N} generator window; defaults to the ambient",
        },
        "system": {
            "a": "translation scale, element text such as 'p^1'",
            "b": "modulation scale, element text",
            "jRange": "[jLow, jHigh] dilation exponents",
            "kCount": "translations 0..kCount-1",
            "mCount": "modulations 0..mCount-1",
        },
        "combination": {
            "kind": "none | partition | matrix | finite-sum",
            "partition": {
                "blocks": "{kind: explicit, blocks: [{label: [r,s,t], members: [[j,k,m],...]}]} "
                "| {kind: pairs} | {kind: urns, urns: n}",
                "coefficients": "{kind: explicit, values: {'j,k,m': [re, im]}} "
                "| {kind: logUniform, low, high}",
            },
            "matrix": {
                "matrix": "{kind: explicit, entries: [[[re, im], ...], ...]} "
                "| {kind: diagonalDominant, offScale, offDensity}",
            },
            "finite-sum": {
                "count": "number of systems",
                "alphas": "{kind: explicit, values: [..]} | {kind: logUniform, low, high, boostIndex}",
                "p": "distinguished system index (0-based)",
                "generators": "'random' (fresh seeded generator per extra system) | 'same'",
            },
        },
        "checks": list(CHECK_IDS),
        "tolerances": {"frameTol": "frame verdict tolerance", "floatTol": "float comparisons"},
        "output": {"directory": "bundle directory", "formats": "subset of [json, csv]"},
    },
    "sweep": {
        "schemaVersion": "int",
        "base": "an experiment config object or a path to one",
        "axes": "[{path: 'dotted.config.path', values: [..]}]",
        "instancesPerPoint": "random instances per axis point (seeded)",
        "seedBase": "instance seed = seedBase + instanceIndex",
        "cap": f"refuse sweeps larger than this (default {DEFAULT_SWEEP_CAP})",
        "output": {"directory": "sweep output directory"},
    },
    "exitCodes": {"0": "success", "2": "validation error", "3": "numerical precondition failure"},
}
