"""Batch command-line front-end.

Subcommands:

* ``compute``          run the recipes of a TOML config over an input file
* ``missing-outcomes`` missing-outcome statistic of one outcome space
* ``multiscale``       run config recipes over coarse-grained scales
* ``bench``            time a recipe over seeded white noise of given sizes
* ``registry``         per-axis catalog sizes and total measure count

Recipes in a batch may be executed on ENTROKIT_THREADS worker threads (the
library is pure); output rows always follow config order.  Output is CSV by
default, JSON lines with ``--output jsonl``.
"""

from __future__ import annotations

import argparse
import json
import os
import platform
import sys
import time
import tracemalloc
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .config import (
    RecipeEntry,
    build_recipe_entry,
    build_space,
    load_config,
    parse_spec_string,
)
from .errors import ConfigError, EntrokitError
from .io import FORMATS, ingest
from .multiscale import MultiscaleSpec, multiscale
from .outcome_spaces import missing_outcomes, total_outcomes
from .recipes import apply_measure, resolve_measure
from .registry import registry_count

_ROW_FIELDS = (
    "name",
    "family",
    "scale",
    "value",
    "n_samples",
    "normalized",
    "status",
    "error",
    "recipe",
)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (EntrokitError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="entrokit",
        description="entropy and complexity timeseries analysis",
    )
    sub = parser.add_subparsers(required=True)

    p = sub.add_parser("compute", help="run the recipes of a config file")
    _add_input_args(p)
    p.add_argument("--config", required=True, help="TOML recipe file")
    _add_output_args(p)
    p.set_defaults(handler=_cmd_compute)

    p = sub.add_parser("missing-outcomes", help="missing-outcome statistic")
    _add_input_args(p)
    p.add_argument("--space", required=True, help="e.g. 'ordinal(m=3,tau=1)'")
    _add_output_args(p)
    p.set_defaults(handler=_cmd_missing)

    p = sub.add_parser("multiscale", help="config recipes over scales 1..S")
    _add_input_args(p)
    p.add_argument("--config", required=True, help="TOML recipe file")
    p.add_argument("--max-scale", required=True, type=int)
    _add_output_args(p)
    p.set_defaults(handler=_cmd_multiscale)

    p = sub.add_parser("bench", help="time a recipe on seeded white noise")
    p.add_argument("--recipe", required=True, help="e.g. 'information(measure=shannon,space=ordinal(m=4))'")
    p.add_argument("--sizes", required=True, help="comma-separated input lengths")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--runs", type=int, default=10, help="timed runs per size (>= 10)")
    _add_output_args(p)
    p.set_defaults(handler=_cmd_bench)

    p = sub.add_parser("registry", help="measure-count report")
    _add_output_args(p)
    p.set_defaults(handler=_cmd_registry)
    return parser


def _add_input_args(p):
    p.add_argument("--input", required=True, help="input data path")
    p.add_argument("--format", default=None, choices=FORMATS)
    p.add_argument("--column", default=None, help="CSV column name or index")


def _add_output_args(p):
    p.add_argument("--output", default="csv", choices=("csv", "jsonl"))
    p.add_argument("--out", default=None, help="write to file instead of stdout")


# ---------------------------------------------------------------------------
# Row formatting

def _emit(rows, fields, args):
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        if args.output == "jsonl":
            for row in rows:
                print(json.dumps({k: row.get(k) for k in fields}), file=out)
        else:
            print(",".join(fields), file=out)
            for row in rows:
                print(",".join(_csv_cell(row.get(k)) for k in fields), file=out)
    finally:
        if args.out:
            out.close()


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    text = str(value)
    if any(ch in text for ch in ",\"\n"):
        text = '"' + text.replace('"', '""') + '"'
    return text


def _result_row(entry, result, scale=None):
    return {
        "name": entry.name,
        "family": entry.family,
        "scale": scale,
        "value": float(result.value),
        "n_samples": result.n_samples,
        "normalized": result.normalized,
        "status": "ok",
        "error": None,
        "recipe": result.recipe,
    }


def _error_row(entry, err, scale=None):
    return {
        "name": entry.name,
        "family": entry.family,
        "scale": scale,
        "value": None,
        "n_samples": None,
        "normalized": None,
        "status": "error",
        "error": f"{type(err).__name__}: {err}",
        "recipe": None,
    }


# ---------------------------------------------------------------------------
# compute / multiscale

def _load_input(args, input_defaults=None):
    column = args.column
    if column is None:
        column = (input_defaults or {}).get("column", 0)
    fmt = args.format or (input_defaults or {}).get("format") or "csv"
    return ingest(args.input, format=fmt, column=column)


def _run_entry(entry: RecipeEntry, data, forced_scale=None):
    """Rows for one recipe; per-recipe errors become error rows."""
    try:
        if entry.pre_encode_space is not None:
            data = entry.pre_encode_space.encode(data)
        max_scale = forced_scale or entry.max_scale
        if max_scale is None:
            return [_result_row(entry, apply_measure(resolve_measure(entry.recipe, data), data))]
        rows = []
        for sr in multiscale(MultiscaleSpec(max_scale=max_scale), entry.recipe, data):
            if sr.ok:
                rows.append(_result_row(entry, sr.result, scale=sr.scale))
            else:
                rows.append(
                    _error_row(entry, EntrokitError(sr.status), scale=sr.scale)
                )
        return rows
    except EntrokitError as err:
        return [_error_row(entry, err, scale=None)]


def _run_batch(entries, data, forced_scale=None):
    n_threads = max(1, int(os.environ.get("ENTROKIT_THREADS", "1")))
    if n_threads == 1 or len(entries) == 1:
        per_entry = [_run_entry(e, data, forced_scale) for e in entries]
    else:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            per_entry = list(
                pool.map(lambda e: _run_entry(e, data, forced_scale), entries)
            )
    rows = [row for chunk in per_entry for row in chunk]
    failed = any(row["status"] != "ok" for row in rows)
    return rows, failed


def _cmd_compute(args) -> int:
    input_defaults, entries = load_config(args.config)
    data = _load_input(args, input_defaults)
    rows, failed = _run_batch(entries, data)
    _emit(rows, _ROW_FIELDS, args)
    return 1 if failed else 0


def _cmd_multiscale(args) -> int:
    if args.max_scale < 1:
        raise ConfigError("--max-scale must be >= 1")
    input_defaults, entries = load_config(args.config)
    data = _load_input(args, input_defaults)
    rows, failed = _run_batch(entries, data, forced_scale=args.max_scale)
    _emit(rows, _ROW_FIELDS, args)
    return 1 if failed else 0


def _cmd_missing(args) -> int:
    space = build_space(parse_spec_string(args.space))
    data = _load_input(args)
    missing = missing_outcomes(space, data)
    total = total_outcomes(space, data)
    rows = [
        {
            "space": repr(space),
            "missing": missing,
            "total": total,
            "fraction": missing / total,
            "n_samples": int(np.asarray(data).shape[0]),
        }
    ]
    _emit(rows, ("space", "missing", "total", "fraction", "n_samples"), args)
    return 0


# ---------------------------------------------------------------------------
# bench

@dataclass(frozen=True)
class BenchmarkReport:
    """Timing and allocation for one recipe at one input size."""

    recipe: str
    n: int
    runs: int
    median_ns: int
    peak_alloc_bytes: int | None
    machine: str


def _bench_one(entry: RecipeEntry, n: int, seed: int, runs: int) -> BenchmarkReport:
    rng = np.random.default_rng(seed)
    data = rng.standard_normal(n)
    measure = resolve_measure(entry.recipe, data)
    apply_measure(measure, data)  # warm-up, discarded
    times = []
    for _ in range(runs):
        t0 = time.perf_counter_ns()
        apply_measure(measure, data)
        times.append(time.perf_counter_ns() - t0)
    # allocation counted on a separate traced run (tracing slows execution)
    tracemalloc.start()
    apply_measure(measure, data)
    _, peak = tracemalloc.get_traced_memory()
    tracemalloc.stop()
    return BenchmarkReport(
        recipe=entry.name,
        n=n,
        runs=runs,
        median_ns=int(np.median(times)),
        peak_alloc_bytes=int(peak),
        machine=f"{platform.platform()} / python {platform.python_version()} "
        f"/ kernels={_kernels.BACKEND}",
    )


def _cmd_bench(args) -> int:
    entry = build_recipe_entry(parse_spec_string(args.recipe), default_name="bench")
    sizes = [int(s) for s in args.sizes.replace(" ", "").split(",") if s]
    if not sizes:
        raise ConfigError("--sizes needs at least one length")
    runs = max(10, args.runs)
    reports = [_bench_one(entry, n, args.seed, runs) for n in sizes]
    rows = [
        {
            "recipe": r.recipe,
            "n": r.n,
            "runs": r.runs,
            "median_ns": r.median_ns,
            "median_ms": r.median_ns / 1e6,
            "peak_alloc_bytes": r.peak_alloc_bytes,
            "machine": r.machine,
        }
        for r in reports
    ]
    if len(reports) >= 2:
        logn = np.log([r.n for r in reports])
        logt = np.log([max(r.median_ns, 1) for r in reports])
        slope = float(np.polyfit(logn, logt, 1)[0])
        for row in rows:
            row["scaling_exponent"] = round(slope, 4)
    fields = list(rows[0].keys())
    _emit(rows, fields, args)
    return 0


def _cmd_registry(args) -> int:
    report = registry_count()
    row = {
        "counting_spaces": report.n_counting_spaces,
        "non_counting_spaces": report.n_non_counting_spaces,
        "prob_estimators": report.n_prob_estimators,
        "pmf_ways": report.pmf_ways,
        "definitions": report.n_definitions,
        "measure_estimates": report.measure_estimates,
        "discrete_total": report.discrete_total,
        "differential_total": report.differential_total,
        "complexity_total": report.complexity_total,
        "probabilities_total": report.probabilities_total,
        "grand_total": report.grand_total,
    }
    _emit([row], list(row.keys()), args)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
