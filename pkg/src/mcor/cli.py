"""Command-line front end.

Subcommands: compute (CSV data), matrix (precomputed correlation matrix),
compare (two inputs, auto-detected), simulate (bundled scenarios),
validate (matrix diagnostics only). Exit codes: 0 success, 1 domain
error, 2 usage error; every failure prints exactly one
``error: <CODE>: <detail>`` line on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import McorError, UsageError
from .io import read_csv_data, read_matrix, sniff_kind
from .linalg import DEFAULT_MAX_SWEEPS, eigenvalues_symmetric, make_symmetric
from .multiway import McorReport, mcor, mcor_from_matrix
from .simulate import Scenario, monte_carlo

TIE_THRESHOLD = 1e-9
U64_MAX = (1 << 64) - 1


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_paths: tuple[str, ...] = ()
    columns: tuple[str, ...] | None = None
    drop_na: bool = False
    output_format: str = "text"
    seed: int = 0
    n_obs: int = 1000
    replicates: int = 100
    scenario: Scenario | None = None
    as_kind: str | None = None
    max_sweeps: int = DEFAULT_MAX_SWEEPS


@dataclass(frozen=True)
class ComparisonReport:
    report_a: McorReport
    report_b: McorReport
    more_correlated: str  # "A", "B" or "tie"
    delta: float


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _u64(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise UsageError(f"seed must be an integer, got {text!r}") from None
    if not 0 <= value <= U64_MAX:
        raise UsageError(f"seed must fit in 64 unsigned bits, got {text}")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise UsageError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise UsageError(f"expected a positive integer, got {text}")
    return value


def _add_output_flag(parser):
    parser.add_argument(
        "--output", choices=("text", "json"), default="text",
        help="report format (default: text)",
    )


def _add_sweeps_flag(parser):
    parser.add_argument(
        "--max-sweeps", type=_positive, default=DEFAULT_MAX_SWEEPS, metavar="N",
        help="eigensolver sweep limit (default: %(default)s)",
    )


def _build_parser() -> _Parser:
    parser = _Parser(prog="mcor", description="Multi-way correlation toolkit")
    sub = parser.add_subparsers(dest="command", metavar="command")

    compute = sub.add_parser("compute", help="coefficient of a data CSV")
    compute.add_argument("path")
    compute.add_argument("--columns", metavar="A,B,...",
                         help="comma-separated column names (default: all numeric)")
    compute.add_argument("--drop-na", action="store_true",
                         help="listwise-delete rows with missing cells")
    _add_output_flag(compute)
    _add_sweeps_flag(compute)

    matrix = sub.add_parser("matrix", help="coefficient of a correlation-matrix CSV")
    matrix.add_argument("path")
    _add_output_flag(matrix)
    _add_sweeps_flag(matrix)

    compare = sub.add_parser("compare", help="which of two inputs is more correlated")
    compare.add_argument("path_a")
    compare.add_argument("path_b")
    compare.add_argument("--as", dest="as_kind", choices=("matrix", "data"),
                         help="force both inputs to one kind (default: auto-detect)")
    compare.add_argument("--columns", metavar="A,B,...")
    compare.add_argument("--drop-na", action="store_true")
    _add_output_flag(compare)
    _add_sweeps_flag(compare)

    simulate = sub.add_parser("simulate", help="Monte Carlo run of a bundled scenario")
    simulate.add_argument("scenario", choices=[s.value for s in Scenario])
    simulate.add_argument("--n", type=_positive, default=1000, metavar="N",
                          help="observations per replicate (default: %(default)s)")
    simulate.add_argument("--reps", type=_positive, default=100, metavar="R",
                          help="replicates (default: %(default)s)")
    simulate.add_argument("--seed", type=_u64, default=0, metavar="S",
                          help="master seed (default: %(default)s)")
    _add_output_flag(simulate)

    validate = sub.add_parser("validate", help="correlation-matrix diagnostics")
    validate.add_argument("path")
    _add_output_flag(validate)
    _add_sweeps_flag(validate)
    return parser


def parse_args(argv) -> RunConfig:
    namespace = _build_parser().parse_args(argv)
    if namespace.command is None:
        raise UsageError("a command is required (compute, matrix, compare, simulate, validate)")
    columns = None
    if getattr(namespace, "columns", None):
        columns = tuple(name.strip() for name in namespace.columns.split(",") if name.strip())
        if not columns:
            raise UsageError("--columns needs at least one name")
    kwargs = dict(command=namespace.command, columns=columns)
    if namespace.command == "compute":
        kwargs.update(input_paths=(namespace.path,), drop_na=namespace.drop_na,
                      output_format=namespace.output, max_sweeps=namespace.max_sweeps)
    elif namespace.command == "matrix":
        kwargs.update(input_paths=(namespace.path,), output_format=namespace.output,
                      max_sweeps=namespace.max_sweeps)
    elif namespace.command == "compare":
        kwargs.update(input_paths=(namespace.path_a, namespace.path_b),
                      drop_na=namespace.drop_na, output_format=namespace.output,
                      as_kind=namespace.as_kind, max_sweeps=namespace.max_sweeps)
    elif namespace.command == "simulate":
        kwargs.update(scenario=Scenario.from_cli_name(namespace.scenario),
                      n_obs=namespace.n, replicates=namespace.reps,
                      seed=namespace.seed, output_format=namespace.output)
    else:
        kwargs.update(input_paths=(namespace.path,), output_format=namespace.output,
                      max_sweeps=namespace.max_sweeps)
    return RunConfig(**kwargs)


def _round12(value):
    """12-significant-digit floats, recursively; shortest repr on output."""
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        return float(f"{value:.12g}")
    if isinstance(value, (list, tuple)):
        return [_round12(v) for v in value]
    if isinstance(value, dict):
        return {k: _round12(v) for k, v in value.items()}
    return value


def _report_dict(report: McorReport) -> dict:
    return {
        "d": report.d,
        "mcor": report.mcor,
        "eigenvalues": list(report.eigenvalues),
        "sphericity": report.sphericity,
        "rescaled_sphericity": report.rescaled_sphericity,
        "min_eigenvalue": report.min_eigenvalue,
    }


def _emit(kind: str, inputs, result: dict, warnings, config: RunConfig, text: str) -> None:
    if config.output_format == "json":
        payload = {
            "kind": kind,
            "inputs": list(inputs),
            "result": _round12(result),
            "warnings": list(warnings),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _fmt_eigs(values) -> str:
    return ", ".join(f"{v:.4f}" for v in values)


def _report_text(report: McorReport, source: str) -> str:
    lines = [
        "multi-way correlation report",
        f"  input:               {source}",
        f"  d:                   {report.d}",
        f"  mcor:                {report.mcor:.4f}",
        f"  eigenvalues:         {_fmt_eigs(report.eigenvalues)}",
        f"  sphericity:          {report.sphericity:.4f}",
        f"  rescaled sphericity: {report.rescaled_sphericity:.4f}",
        f"  min eigenvalue:      {report.min_eigenvalue:.6g}",
    ]
    if report.warnings:
        lines.extend(f"  warning: {w}" for w in report.warnings)
    return "\n".join(lines)


def _load_report(path: str, kind: str, config: RunConfig) -> McorReport:
    if kind == "matrix":
        return mcor_from_matrix(read_matrix(path), max_sweeps=config.max_sweeps)
    data = read_csv_data(path, columns=config.columns, drop_na=config.drop_na)
    return mcor(data, max_sweeps=config.max_sweeps)


def _run_single(config: RunConfig, kind: str) -> int:
    path = config.input_paths[0]
    report = _load_report(path, "matrix" if config.command == "matrix" else "data", config)
    _emit(
        "mcor_report",
        [path],
        _report_dict(report),
        report.warnings,
        config,
        _report_text(report, path),
    )
    return 0


def _run_compare(config: RunConfig) -> int:
    path_a, path_b = config.input_paths
    kind_a = config.as_kind or sniff_kind(path_a)
    kind_b = config.as_kind or sniff_kind(path_b)
    report_a = _load_report(path_a, kind_a, config)
    report_b = _load_report(path_b, kind_b, config)
    delta = report_a.mcor - report_b.mcor
    if delta > TIE_THRESHOLD:
        verdict = "A"
    elif delta < -TIE_THRESHOLD:
        verdict = "B"
    else:
        verdict = "tie"
    comparison = ComparisonReport(report_a, report_b, verdict, delta)
    result = {
        "report_a": _report_dict(report_a),
        "report_b": _report_dict(report_b),
        "more_correlated": verdict,
        "delta": delta,
    }
    warnings = [f"A: {w}" for w in report_a.warnings]
    warnings += [f"B: {w}" for w in report_b.warnings]
    text = "\n".join([
        "comparison",
        f"  A ({kind_a}): {path_a}",
        f"      mcor: {report_a.mcor:.4f}   eigenvalues: {_fmt_eigs(report_a.eigenvalues)}",
        f"  B ({kind_b}): {path_b}",
        f"      mcor: {report_b.mcor:.4f}   eigenvalues: {_fmt_eigs(report_b.eigenvalues)}",
        f"  delta (A - B):   {delta:.4f}",
        f"  more correlated: {comparison.more_correlated}",
    ] + [f"  warning: {w}" for w in warnings])
    _emit("comparison", [path_a, path_b], result, warnings, config, text)
    return 0


def _run_simulate(config: RunConfig) -> int:
    summary = monte_carlo(config.scenario, config.n_obs, config.replicates, config.seed)
    result = {
        "scenario": summary.scenario.value,
        "n_obs": summary.n_obs,
        "replicates": summary.replicates,
        "seed": summary.seed,
        "mcor_mean": summary.mcor_mean,
        "mcor_sd": summary.mcor_sd,
        "mcor_min": summary.mcor_min,
        "mcor_max": summary.mcor_max,
    }
    text = "\n".join([
        "monte carlo summary",
        f"  scenario:   {summary.scenario.value} ({summary.scenario.description})",
        f"  n_obs:      {summary.n_obs}",
        f"  replicates: {summary.replicates}",
        f"  seed:       {summary.seed}",
        f"  mcor mean:  {summary.mcor_mean:.4f}",
        f"  mcor sd:    {summary.mcor_sd:.4f}",
        f"  mcor min:   {summary.mcor_min:.4f}",
        f"  mcor max:   {summary.mcor_max:.4f}",
    ])
    _emit("monte_carlo", [f"scenario:{summary.scenario.value}"], result, [], config, text)
    return 0


def _run_validate(config: RunConfig) -> int:
    from .io import _numeric_grid  # diagnostics need the raw, unmirrored grid

    path = config.input_paths[0]
    grid = _numeric_grid(path)
    d = len(grid)
    max_asym = max(
        (abs(grid[i][j] - grid[j][i]) for i in range(d) for j in range(i + 1, d)),
        default=0.0,
    )
    max_diag_dev = max(abs(grid[i][i] - 1.0) for i in range(d))
    tri = []
    for i in range(d):
        for j in range(i):
            tri.append(0.5 * (grid[i][j] + grid[j][i]))
        tri.append(grid[i][i])
    spectrum = eigenvalues_symmetric(make_symmetric(d, tri), max_sweeps=config.max_sweeps)
    min_eig = spectrum.values[-1]
    checks = {
        "symmetric": max_asym <= 1e-9,
        "unit_diagonal": max_diag_dev <= 1e-9,
        "psd": min_eig >= -1e-8,
    }
    warnings = [f"failed check: {name}" for name, ok in checks.items() if not ok]
    result = {
        "d": d,
        "symmetric": checks["symmetric"],
        "max_asymmetry": max_asym,
        "unit_diagonal": checks["unit_diagonal"],
        "max_diagonal_deviation": max_diag_dev,
        "psd": checks["psd"],
        "min_eigenvalue": min_eig,
    }
    text = "\n".join([
        "correlation-matrix diagnostics",
        f"  input:                  {path}",
        f"  d:                      {d}",
        f"  symmetric:              {'yes' if checks['symmetric'] else 'NO'}"
        f" (max asymmetry {max_asym:.3e})",
        f"  unit diagonal:          {'yes' if checks['unit_diagonal'] else 'NO'}"
        f" (max deviation {max_diag_dev:.3e})",
        f"  PSD within tolerance:   {'yes' if checks['psd'] else 'NO'}"
        f" (min eigenvalue {min_eig:.6g})",
    ] + [f"  warning: {w}" for w in warnings])
    _emit("validation", [path], result, warnings, config, text)
    return 0


def run(config: RunConfig) -> int:
    """Execute a validated RunConfig; returns the process exit code."""
    if config.command in ("compute", "matrix"):
        return _run_single(config, config.command)
    if config.command == "compare":
        return _run_compare(config)
    if config.command == "simulate":
        return _run_simulate(config)
    if config.command == "validate":
        return _run_validate(config)
    raise UsageError(f"unknown command {config.command!r}")


def main(argv=None) -> int:
    args = sys.argv[1:] if argv is None else list(argv)
    try:
        try:
            config = parse_args(args)
        except SystemExit as exc:  # --help lands here
            return int(exc.code or 0)
        return run(config)
    except UsageError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 2
    except McorError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
