"""Config-driven experiment runner.

``run_experiment`` builds the model, generator, system, and combination from
a validated config, executes the requested checks, and writes a report
bundle: one JSON report per check, a manifest (inputs, seed, library
version), and optional CSV dumps of the generator and Gram matrix.

Everything is deterministic for a fixed (config, seed): one numpy Generator
seeded per instance drives the generator draw first, then any random
combination parts, in a fixed order.  Sweep instances use
seed = seedBase + instanceIndex and are independent, so worker count does
not change results; files are written atomically per instance.
"""

from __future__ import annotations

import csv
import datetime
import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .combinations import (
    CoefficientFamily,
    CombinationMatrix,
    IndexPartition,
    TheoremReport,
    check_corollary_2_6,
    check_remark_2_7,
    check_theorem_2_1,
    check_theorem_2_2,
    check_theorem_2_3,
    check_theorem_2_4,
    check_theorem_2_5,
)
from .config import ExperimentConfig, SweepSpec, set_by_path, validate_config
from .errors import LfwpError, ParseError
from .instances import (
    diagonal_dominant_matrix,
    log_uniform,
    pair_partition,
    urn_partition,
)
from .model import ModelWindow, indicator_of_integers, norm, random_function
from .serialize import (
    atomic_write_text,
    dumps_stable,
    load_function,
    load_matrix,
    load_meta,
    save_function,
    save_matrix,
)
from .systems import WavePacketParams, bounds_report, generate_system, gram_matrix

WORKERS_ENV = "LFWP_WORKERS"


@dataclass
class ExperimentParts:
    """Everything an experiment builds before checks run."""

    config: ExperimentConfig
    seed: int
    generator_fn: object
    system: object
    extra_systems: list
    alphas: list | None
    partition: IndexPartition | None
    coefficients: CoefficientFamily | None
    matrix: CombinationMatrix | None


def _build_generator(config: ExperimentConfig, rng: np.random.Generator):
    gen = config.generator
    gm, gn = gen.window or (config.window.M, config.window.N)
    window = ModelWindow(config.spec, gm, gn)
    if gen.kind == "indicator":
        return indicator_of_integers(window)
    if gen.kind == "random":
        return random_function(window, rng)
    return load_function(gen.path)


def _system_params(config: ExperimentConfig) -> WavePacketParams:
    sysc = config.system
    return WavePacketParams(
        a=sysc.a,
        b=sysc.b,
        j_values=tuple(range(sysc.j_range[0], sysc.j_range[1] + 1)),
        k_count=sysc.k_count,
        m_count=sysc.m_count,
    )


def _build_partition(payload: dict, labels, rng) -> IndexPartition:
    blocks = payload["blocks"]
    if blocks["kind"] == "explicit":
        part = IndexPartition.from_blocks(
            (tuple(b["label"]), tuple(tuple(m) for m in b["members"])) for b in blocks["blocks"]
        )
    elif blocks["kind"] == "pairs":
        part = pair_partition(labels, rng)
    else:
        part = urn_partition(labels, rng, blocks["urns"])
    part.validate_for(labels)
    return part


def _build_coefficients(payload: dict, labels, rng) -> CoefficientFamily:
    coeffs = payload["coefficients"]
    if coeffs["kind"] == "explicit":
        values = {}
        for key, pair in coeffs["values"].items():
            label = tuple(int(x) for x in str(key).split(","))
            values[label] = complex(pair[0], pair[1])
        return CoefficientFamily(values)
    low = coeffs.get("low", 0.1)
    high = coeffs.get("high", 10.0)
    return CoefficientFamily({label: log_uniform(rng, low, high) for label in labels})


def _build_matrix(payload: dict, labels, rng) -> CombinationMatrix:
    matrix = payload["matrix"]
    if matrix["kind"] == "explicit":
        rows = np.array(
            [[complex(e[0], e[1]) for e in row] for row in matrix["entries"]],
            dtype=np.complex128,
        )
        return CombinationMatrix(tuple(range(rows.shape[0])), tuple(labels), rows)
    return diagonal_dominant_matrix(
        labels,
        rng,
        off_scale=matrix.get("offScale", 0.15),
        off_density=matrix.get("offDensity", 0.3),
    )


def _build_alphas(payload: dict, count: int, rng) -> list:
    alphas = payload["alphas"]
    if alphas["kind"] == "explicit":
        return [float(v) for v in alphas["values"]]
    low = alphas.get("low", 0.1)
    high = alphas.get("high", 10.0)
    boost = alphas.get("boostIndex")
    if boost is None:
        return [log_uniform(rng, low, high) for _ in range(count)]
    out = [log_uniform(rng, 0.02, 0.2) for _ in range(count)]
    out[boost] = log_uniform(rng, 4.0, 12.0)
    return out


def build_experiment(config: ExperimentConfig, seed_override: int | None = None) -> ExperimentParts:
    seed = config.generator.seed if seed_override is None else seed_override
    rng = np.random.default_rng(seed)
    psi = _build_generator(config, rng)
    params = _system_params(config)
    system = generate_system(psi, params, config.window)

    combo = config.combination
    kind = combo["kind"]
    partition = coefficients = matrix = None
    extra_systems: list = []
    alphas = None
    if kind == "partition":
        partition = _build_partition(combo, system.labels, rng)
        coefficients = _build_coefficients(combo, system.labels, rng)
    elif kind == "matrix":
        matrix = _build_matrix(combo, system.labels, rng)
    elif kind == "finite-sum":
        count = combo["count"]
        if combo.get("generators", "random") == "same":
            extra_systems = [system] * (count - 1)
        else:
            extra_systems = [
                generate_system(random_function(psi.window, rng), params, config.window)
                for _ in range(count - 1)
            ]
        alphas = _build_alphas(combo, count, rng)
    return ExperimentParts(
        config=config,
        seed=seed,
        generator_fn=psi,
        system=system,
        extra_systems=extra_systems,
        alphas=alphas,
        partition=partition,
        coefficients=coefficients,
        matrix=matrix,
    )


def _frame_bounds_report(parts: ExperimentParts) -> TheoremReport:
    report = bounds_report(parts.system, parts.config.frame_tol)
    span, ambient = report["span"], report["ambient"]
    return TheoremReport(
        theorem_id="frame_bounds",
        seed=parts.seed,
        condition_values={
            "A_span": span.A,
            "B_span": span.B,
            "A_ambient": ambient.A,
            "B_ambient": ambient.B,
        },
        actual_bounds=report,
        verdict_condition=span.is_frame,
        verdict_frame=span.is_frame,
        consistent=True,
    )


def run_checks(parts: ExperimentParts) -> list[TheoremReport]:
    config = parts.config
    tol = config.frame_tol
    systems = [parts.system] + parts.extra_systems
    p = config.combination.get("p", 0)
    reports: list[TheoremReport] = []
    for check in config.checks:
        if check == "frame_bounds":
            reports.append(_frame_bounds_report(parts))
        elif check == "theorem_2_1":
            reports.append(
                check_theorem_2_1(parts.system, parts.partition, parts.coefficients, tol, seed=parts.seed)
            )
        elif check == "theorem_2_2":
            reports.append(
                check_theorem_2_2(parts.system, parts.partition, parts.coefficients, tol, seed=parts.seed)
            )
        elif check == "theorem_2_3":
            reports.append(check_theorem_2_3(parts.system, parts.matrix, config.float_tol, seed=parts.seed))
        elif check == "theorem_2_4":
            reports.append(check_theorem_2_4(systems, parts.alphas, tol, seed=parts.seed))
        elif check == "theorem_2_5":
            for variant in ("literal", "corrected"):
                reports.append(
                    check_theorem_2_5(
                        systems, parts.alphas, p, variant=variant, tol=config.float_tol, seed=parts.seed
                    )
                )
        elif check == "corollary_2_6":
            reports.append(
                check_corollary_2_6(systems, parts.alphas, p, tol=config.float_tol, seed=parts.seed)
            )
        elif check == "remark_2_7":
            reports.append(check_remark_2_7(systems, parts.alphas, tol=config.float_tol, seed=parts.seed))
    return reports


def run_experiment(
    config: ExperimentConfig,
    out_dir: Path | str | None = None,
    seed_override: int | None = None,
) -> dict:
    """Build, check, and persist one experiment; returns the bundle summary."""
    parts = build_experiment(config, seed_override)
    reports = run_checks(parts)
    out = Path(out_dir) if out_dir is not None else Path(config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[str] = []
    for report in reports:
        name = f"report_{report.theorem_id}.json"
        atomic_write_text(out / name, dumps_stable(report.as_dict()))
        written.append(name)
    if "csv" in config.formats:
        for path in save_function(parts.generator_fn, out / "generator.csv"):
            written.append(path.name)
        for path in save_matrix(gram_matrix(parts.system), config.window, out / "gram.csv"):
            written.append(path.name)
    manifest = {
        "schemaVersion": config.raw.get("schemaVersion"),
        "libraryVersion": __version__,
        "generatedAt": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "seed": parts.seed,
        "config": config.raw,
        "outputs": sorted(written),
    }
    atomic_write_text(out / "manifest.json", dumps_stable(manifest))
    return {
        "outDir": str(out),
        "seed": parts.seed,
        "reports": [r.as_dict() for r in reports],
        "outputs": sorted(written) + ["manifest.json"],
    }


# -- sweeps ---------------------------------------------------------------------


SUMMARY_RULES = {
    # check id -> how a violation is counted from a report dict
    "theorem_2_1": lambda r: not r["consistent"] and not r["conditionValues"].get("borderline"),
    "theorem_2_4": lambda r: not r["consistent"] and not r["conditionValues"].get("borderline"),
    "theorem_2_2": lambda r: r["verdictCondition"] and not r["verdictFrame"],
    "theorem_2_3": lambda r: r["verdictCondition"] and not r["consistent"],
    "theorem_2_5_literal": lambda r: r["verdictCondition"] and not r["consistent"],
    "theorem_2_5_corrected": lambda r: r["verdictCondition"] and not r["consistent"],
    "corollary_2_6": lambda r: r["verdictCondition"] and not r["verdictFrame"],
    "remark_2_7": lambda r: not r["verdictCondition"],
    "frame_bounds": lambda r: False,
}


def _axis_points(spec: SweepSpec):
    points = [()]
    for _, values in spec.axes:
        points = [prev + (v,) for prev in points for v in values]
    return points


def _sweep_instance(spec: SweepSpec, index: int, point, out_root: Path) -> dict:
    data = json.loads(json.dumps(spec.base))
    for (path, _), value in zip(spec.axes, point):
        set_by_path(data, path, value)
    config = validate_config(data)
    seed = spec.seed_base + index
    inst_dir = out_root / "instances" / f"{index:05d}"
    row = {
        "instance": index,
        "seed": seed,
        **{path: value for (path, _), value in zip(spec.axes, point)},
    }
    try:
        result = run_experiment(config, out_dir=inst_dir, seed_override=seed)
    except LfwpError as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
        return {"row": row, "reports": [], "error": row["error"]}
    return {"row": row, "reports": result["reports"], "error": None}


def run_sweep(spec: SweepSpec, out_dir: Path | str | None = None, workers: int | None = None) -> dict:
    """One row per (instance, check) with values, verdicts, bounds; summary
    rows carry violation counts per check."""
    out_root = Path(out_dir) if out_dir is not None else Path(spec.out_dir)
    out_root.mkdir(parents=True, exist_ok=True)
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1"))
    workers = max(1, workers)

    tasks = []
    index = 0
    for point in _axis_points(spec):
        for _ in range(spec.instances_per_point):
            tasks.append((index, point))
            index += 1

    if workers == 1:
        results = [_sweep_instance(spec, i, point, out_root) for i, point in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_sweep_instance, spec, i, point, out_root) for i, point in tasks]
            results = [f.result() for f in futures]

    cv_keys = sorted(
        {f"cv_{k}" for res in results for rep in res["reports"] for k in rep["conditionValues"]}
    )
    axis_cols = [path for path, _ in spec.axes]
    header = (
        ["instance", "seed"]
        + axis_cols
        + ["check", "verdictCondition", "verdictFrame", "consistent",
           "A_span", "B_span", "A_ambient", "B_ambient", "rank", "error", "violations"]
        + cv_keys
    )
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=header, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    violations: dict[str, int] = {}
    errors = 0
    for res in results:
        base_row = res["row"]
        if res["error"] is not None:
            errors += 1
            writer.writerow({**base_row, "check": "", "error": res["error"]})
            continue
        for rep in res["reports"]:
            check = rep["theoremId"]
            bad = SUMMARY_RULES.get(check, lambda r: False)(rep)
            violations[check] = violations.get(check, 0) + int(bad)
            row = {
                **base_row,
                "check": check,
                "verdictCondition": rep["verdictCondition"],
                "verdictFrame": rep["verdictFrame"],
                "consistent": rep["consistent"],
                "A_span": rep["actualBounds"]["span"]["A"],
                "B_span": rep["actualBounds"]["span"]["B"],
                "A_ambient": rep["actualBounds"]["ambient"]["A"],
                "B_ambient": rep["actualBounds"]["ambient"]["B"],
                "rank": rep["actualBounds"]["rank"],
            }
            for key, value in rep["conditionValues"].items():
                row[f"cv_{key}"] = value
            writer.writerow(row)
    for check in sorted(violations):
        writer.writerow({"instance": "summary", "check": check, "violations": violations[check]})
    atomic_write_text(out_root / "aggregate.csv", buffer.getvalue())
    summary = {
        "instances": len(tasks),
        "errors": errors,
        "violations": dict(sorted(violations.items())),
        "workers": workers,
        "seedBase": spec.seed_base,
    }
    atomic_write_text(out_root / "summary.json", dumps_stable(summary))
    return summary


# -- inspect --------------------------------------------------------------------


def inspect_file(path: Path | str) -> str:
    """Human-readable summary of a function/matrix CSV or a JSON report."""
    path = Path(path)
    if not path.exists():
        raise ParseError(f"{path}: no such file")
    if path.suffix == ".json":
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc.msg} at line {exc.lineno}", offset=exc.pos) from exc
        return _inspect_json(path, data)
    if path.suffix == ".csv":
        meta = load_meta(path)
        if meta.get("kind") == "function":
            f = load_function(path)
            support = int(np.count_nonzero(f.values))
            return (
                f"function file {path.name}: q={f.window.spec.q} "
                f"(p={f.window.spec.p}, c={f.window.spec.c}), window ({f.window.M}, {f.window.N}), "
                f"dim {f.window.dim}, norm {norm(f):.6g}, support {support}/{f.window.dim} points"
            )
        if meta.get("kind") == "matrix":
            matrix, _ = load_matrix(path)
            eig = np.linalg.eigvalsh(matrix)
            return (
                f"matrix file {path.name}: {meta.get('matrixKind', 'hermitian')} "
                f"{matrix.shape[0]}x{matrix.shape[1]}, eigenvalues in "
                f"[{eig[0]:.6g}, {eig[-1]:.6g}]"
            )
        raise ParseError(f"{path}: unknown sidecar kind {meta.get('kind')!r}")
    raise ParseError(f"{path}: cannot inspect files of this type")


def _inspect_json(path: Path, data: dict) -> str:
    if "theoremId" in data:
        lines = [f"report {path.name}: {data['theoremId']} (seed {data.get('seed')})"]
        lines.append(
            f"  condition: {data['verdictCondition']}   frame: {data['verdictFrame']}   "
            f"consistent: {data['consistent']}"
        )
        span = data["actualBounds"]["span"]
        ambient = data["actualBounds"]["ambient"]
        lines.append(f"  span bounds    A={span['A']:.6g}  B={span['B']:.6g}  frame={span['isFrame']}")
        lines.append(
            f"  ambient bounds A={ambient['A']:.6g}  B={ambient['B']:.6g}  frame={ambient['isFrame']}"
        )
        if data.get("predictedBounds"):
            lines.append(f"  predicted: {data['predictedBounds']}")
        for key, value in sorted(data.get("conditionValues", {}).items()):
            lines.append(f"  {key} = {value:.10g}" if isinstance(value, float) else f"  {key} = {value}")
        for note in data.get("notes", []):
            lines.append(f"  note: {note}")
        return "\n".join(lines)
    if "libraryVersion" in data:
        return (
            f"manifest {path.name}: library {data['libraryVersion']}, seed {data.get('seed')}, "
            f"outputs: {', '.join(data.get('outputs', []))}"
        )
    if "violations" in data:
        parts = [f"sweep summary {path.name}: {data.get('instances')} instances"]
        for check, count in data["violations"].items():
            parts.append(f"  {check}: {count} violations")
        return "\n".join(parts)
    return f"json file {path.name}: keys {', '.join(sorted(data))}"
