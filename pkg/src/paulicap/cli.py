"""Command-line interface: point evaluation, parameter scans, figure data, oracles.

All output is plot-ready text (aligned report, CSV, or JSON), never images,
and is deterministic for fixed flags: numbers are printed with 10
significant digits, booleans as true/false, newlines as plain \\n.

Exit codes: 0 success, 1 oracle verification failure, 2 usage or domain
error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .bounds import (
    OptimizerConfig,
    antidegradability_boundary,
    best_quantum_upper_bound,
    classical_equals_A_boundary,
    flag_bound_A,
    flag_bound_B,
    quantum_capacity_interval,
    region_flags,
)
from .capacities import classical_capacity, entanglement_assisted_capacity
from .channel import ChannelParams
from .errors import DomainError, ValidationError
from .report import evaluate_point

SCAN_COLUMNS = [
    "p0", "p3", "p1", "C_cl", "xi", "branch", "C_E", "A", "B",
    "best_upper", "best_upper_source", "lower", "eb", "ad", "known_zero",
]
DEFAULT_FIG5_EPS = (0.2, 0.4, 0.6, 0.8, 1.0)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return value
    return format(float(value) + 0.0, ".10g")


def _round10(value: float) -> float:
    return float(format(float(value) + 0.0, ".10g"))


def _optimizer_config(args) -> OptimizerConfig:
    return OptimizerConfig(
        grid_resolution=args.opt_grid,
        refine_tolerance=args.refine_tol,
        refine_max_iterations=args.refine_max_iter,
    )


def _add_optimizer_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--opt-grid", type=int, default=201,
                        help="optimizer grid resolution per axis (default 201)")
    parser.add_argument("--refine-tol", type=float, default=1e-9,
                        help="pattern-search step floor (default 1e-9)")
    parser.add_argument("--refine-max-iter", type=int, default=10_000,
                        help="pattern-search iteration cap (default 10000)")


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)


def _cmd_point(args) -> int:
    params = ChannelParams(args.p0, args.p3)
    rep = evaluate_point(params, config=_optimizer_config(args), include_lower=not args.skip_lower)
    if args.json:
        payload = {
            "p0": _round10(params.p0),
            "p3": _round10(params.p3),
            "p1": _round10(params.p1),
            "epsilon": _round10(params.epsilon),
            "C_cl": _round10(rep.classical.value),
            "xi": _round10(rep.classical.xi),
            "branch": rep.classical.branch,
            "C_E": _round10(rep.entanglement_assisted),
            "A": _round10(rep.upper_a),
            "B": _round10(rep.upper_b),
            "best_upper": _round10(rep.best_upper),
            "best_upper_source": rep.best_upper_source,
            "lower": None if rep.lower is None else _round10(rep.lower),
            "lower_argmax": None if rep.lower_argmax is None
            else [_round10(rep.lower_argmax[0]), _round10(rep.lower_argmax[1])],
            "private_upper": _round10(rep.private_upper),
            "eb": rep.entanglement_breaking,
            "ad": rep.antidegradable,
            "ad_margin": _round10(rep.ad_margin),
            "pt_eigenvalues": [_round10(v) for v in rep.pt_eigenvalues],
            "known_zero": rep.capacity_known_zero,
        }
        print(json.dumps(payload))
        return 0
    lines = [
        ("p0", _fmt(params.p0)),
        ("p3", _fmt(params.p3)),
        ("p1", _fmt(params.p1)),
        ("epsilon", _fmt(params.epsilon)),
        ("classical_capacity", f"{_fmt(rep.classical.value)}  (branch={rep.classical.branch}, xi={_fmt(rep.classical.xi)})"),
        ("entanglement_assisted", _fmt(rep.entanglement_assisted)),
        ("flag_bound_A", _fmt(rep.upper_a)),
        ("flag_bound_B", _fmt(rep.upper_b)),
        ("best_upper", f"{_fmt(rep.best_upper)}  (source={rep.best_upper_source})"),
        ("lower_single_shot", "skipped" if rep.lower is None
         else f"{_fmt(rep.lower)}  at (r={_fmt(rep.lower_argmax[0])}, z={_fmt(rep.lower_argmax[1])})"),
        ("private_upper", _fmt(rep.private_upper)),
        ("entanglement_breaking", _fmt(rep.entanglement_breaking)),
        ("antidegradable", f"{_fmt(rep.antidegradable)}  (margin={_fmt(rep.ad_margin)})"),
        ("pt_eigenvalues", " ".join(_fmt(v) for v in rep.pt_eigenvalues)),
        ("capacity_known_zero", _fmt(rep.capacity_known_zero)),
    ]
    width = max(len(name) for name, _ in lines)
    for name, value in lines:
        print(f"{name:<{width}}  {value}")
    return 0


def _scan_records(grid_n: int, include_lower: bool, cfg: OptimizerConfig):
    for i in range(grid_n):
        p0 = i / (grid_n - 1)
        for j in range(grid_n - i):
            p3 = j / (grid_n - 1)
            params = ChannelParams(p0, p3)
            rep = evaluate_point(params, config=cfg, include_lower=include_lower)
            record = {
                "p0": params.p0,
                "p3": params.p3,
                "p1": params.p1,
                "C_cl": rep.classical.value,
                "xi": rep.classical.xi,
                "branch": rep.classical.branch,
                "C_E": rep.entanglement_assisted,
                "A": rep.upper_a,
                "B": rep.upper_b,
                "best_upper": rep.best_upper,
                "best_upper_source": rep.best_upper_source,
                "lower": rep.lower,
                "eb": rep.entanglement_breaking,
                "ad": rep.antidegradable,
                "known_zero": rep.capacity_known_zero,
            }
            if not include_lower:
                del record["lower"]
            yield record


def _cmd_scan(args) -> int:
    if args.grid_n < 2:
        raise DomainError(f"grid size must be >= 2, got {args.grid_n}")
    include_lower = not args.skip_lower
    cfg = _optimizer_config(args)
    columns = [c for c in SCAN_COLUMNS if include_lower or c != "lower"]
    records = _scan_records(args.grid_n, include_lower, cfg)
    if args.format == "csv":
        lines = [",".join(columns)]
        for record in records:
            lines.append(",".join(_fmt(record[c]) for c in columns))
        _write_text(args.out, "\n".join(lines) + "\n")
    else:
        rows = []
        for record in records:
            row = {}
            for c in columns:
                v = record[c]
                row[c] = _round10(v) if isinstance(v, float) else v
            rows.append(row)
        _write_text(args.out, json.dumps(rows, indent=None) + "\n")
    print(f"wrote {args.out}")
    return 0


def _boundary_path(out: str) -> str:
    path = Path(out)
    return str(path.with_name(path.stem + "_boundary" + (path.suffix or ".csv")))


def _simplex_grid(grid_n: int):
    for i in range(grid_n):
        p0 = i / (grid_n - 1)
        for j in range(grid_n - i):
            yield ChannelParams(p0, j / (grid_n - 1))


def _figure_fig2(args) -> int:
    lines = ["p0,p3,xi,branch,C_cl"]
    for params in _simplex_grid(args.grid_n):
        res = classical_capacity(params)
        lines.append(",".join([
            _fmt(params.p0), _fmt(params.p3), _fmt(res.xi), res.branch, _fmt(res.value),
        ]))
    _write_text(args.out, "\n".join(lines) + "\n")
    print(f"wrote {args.out}")
    return 0


def _figure_fig3(args) -> int:
    lines = ["p0,p3,eb,ad,ad_margin"]
    for params in _simplex_grid(args.grid_n):
        flags = region_flags(params)
        lines.append(",".join([
            _fmt(params.p0), _fmt(params.p3),
            _fmt(flags.entanglement_breaking), _fmt(flags.antidegradable), _fmt(flags.ad_margin),
        ]))
    _write_text(args.out, "\n".join(lines) + "\n")

    boundary = ["s,eps,p0,p3"]
    for s in np.linspace(0.0, 1.0, args.samples):
        if s <= 0.0:
            continue
        eps = antidegradability_boundary(float(s))
        if eps is None:
            continue
        point = ChannelParams.from_sum_asymmetry(float(s), eps)
        boundary.append(",".join([_fmt(s), _fmt(eps), _fmt(point.p0), _fmt(point.p3)]))
    bpath = _boundary_path(args.out)
    _write_text(bpath, "\n".join(boundary) + "\n")
    print(f"wrote {args.out}")
    print(f"wrote {bpath}")
    return 0


def _figure_fig4(args) -> int:
    lines = ["p0,p3,A,B,C_cl,best_upper,best_upper_source"]
    for params in _simplex_grid(args.grid_n):
        best, source = best_quantum_upper_bound(params)
        lines.append(",".join([
            _fmt(params.p0), _fmt(params.p3),
            _fmt(flag_bound_A(params)), _fmt(flag_bound_B(params)),
            _fmt(classical_capacity(params).value), _fmt(best), source,
        ]))
    _write_text(args.out, "\n".join(lines) + "\n")

    boundary = ["s,eps,p0,p3,A,C_cl"]
    for s in np.linspace(0.0, 1.0, args.samples):
        if s <= 0.0:
            continue
        eps = classical_equals_A_boundary(float(s), tol=1e-13)
        if eps is None:
            continue
        point = ChannelParams.from_sum_asymmetry(float(s), eps)
        boundary.append(",".join([
            _fmt(s), _fmt(eps), _fmt(point.p0), _fmt(point.p3),
            _fmt(flag_bound_A(point)), _fmt(classical_capacity(point).value),
        ]))
    bpath = _boundary_path(args.out)
    _write_text(bpath, "\n".join(boundary) + "\n")
    print(f"wrote {args.out}")
    print(f"wrote {bpath}")
    return 0


def _figure_fig5(args) -> int:
    cfg = _optimizer_config(args)
    lines = ["eps,s,upper,lower"]
    for eps in args.eps:
        if not -1.0 <= eps <= 1.0:
            raise DomainError(f"asymmetry must lie in [-1, 1], got {eps!r}")
        for s in np.linspace(0.0, 1.0, args.samples):
            point = ChannelParams.from_sum_asymmetry(float(s), float(eps))
            bounds = quantum_capacity_interval(point, cfg)
            lines.append(",".join([
                _fmt(eps), _fmt(s), _fmt(bounds.best_upper), _fmt(bounds.lower_single_shot),
            ]))
    _write_text(args.out, "\n".join(lines) + "\n")
    print(f"wrote {args.out}")
    return 0


def _cmd_figure(args) -> int:
    handler = {
        "fig2": _figure_fig2,
        "fig3": _figure_fig3,
        "fig4": _figure_fig4,
        "fig5": _figure_fig5,
    }[args.which]
    return handler(args)


def _cmd_verify(args) -> int:
    from .oracles import run_all_oracles

    reports = run_all_oracles(seed=args.seed, samples=args.samples)
    width = max(len(r.name) for r in reports)
    all_passed = True
    for rep in reports:
        status = "pass" if rep.passed else "FAIL"
        print(
            f"{rep.name:<{width}}  samples={rep.samples}  "
            f"max_abs_deviation={_fmt(rep.max_abs_deviation)}  seed={rep.seed}  {status}"
        )
        all_passed = all_passed and rep.passed
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paulicap",
        description="Capacities and capacity bounds of the rotation-covariant Pauli qubit channel.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    point = sub.add_parser("point", help="evaluate every quantity at one parameter point")
    point.add_argument("--p0", type=float, required=True)
    point.add_argument("--p3", type=float, required=True)
    point.add_argument("--json", action="store_true", help="emit a JSON object instead of text")
    point.add_argument("--skip-lower", action="store_true", help="skip the optimizer-based lower bound")
    _add_optimizer_flags(point)
    point.set_defaults(func=_cmd_point)

    scan = sub.add_parser("scan", help="evaluate a full parameter-triangle grid into a file")
    scan.add_argument("--grid-n", type=int, required=True, help="grid points per axis (>= 2)")
    scan.add_argument("--out", required=True, help="output file path")
    scan.add_argument("--format", choices=["csv", "json"], default="csv")
    scan.add_argument("--skip-lower", action="store_true",
                      help="omit the optimizer column for fast scans")
    _add_optimizer_flags(scan)
    scan.set_defaults(func=_cmd_scan)

    figure = sub.add_parser("figure", help="emit plot-ready figure data files")
    figure.add_argument("which", choices=["fig2", "fig3", "fig4", "fig5"])
    figure.add_argument("--out", required=True, help="output file path")
    figure.add_argument("--grid-n", type=int, default=201,
                        help="region grid points per axis (fig2/fig3/fig4)")
    figure.add_argument("--samples", type=int, default=101,
                        help="boundary/curve sample count (fig3/fig4/fig5)")
    figure.add_argument("--eps", type=float, nargs="+", default=list(DEFAULT_FIG5_EPS),
                        help="asymmetry values for fig5 curves")
    _add_optimizer_flags(figure)
    figure.set_defaults(func=_cmd_figure)

    verify = sub.add_parser("verify", help="run the brute-force oracle suite")
    verify.add_argument("--seed", type=int, default=1)
    verify.add_argument("--samples", type=int, default=50,
                        help="random parameter points per oracle (default 50)")
    verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    raise SystemExit(main())
