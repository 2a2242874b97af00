"""Command-line interface: reproducible CSV/JSON emission for the well family.

Subcommands
    potential   sample the partner potential            -> x,V
    states      potential plus both bound states        -> x,V,psi0,psi1,rho0
    verify      analytic spectrum vs eigensolver        -> JSON report
    classify    interval taxonomy one-liner             -> text or JSON
    evolve      left-well probability vs time           -> t,P_left
    sweep       closed-form/oracle quantities over eps  -> one row per eps

All numbers are written with the shortest round-trip decimal representation,
so repeated runs are byte-identical and every emitted file parses back
losslessly.  Exit codes: 0 ok, 1 verification failed, 2 bad arguments,
3 grid too narrow, 4 eigensolver failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence

import numpy as np

from . import dynamics, oracle, wells
from .grids import Grid, GridTooNarrow, RealWave
from .transform import (
    InvalidEpsilon,
    excited_state,
    ground_state,
    potential_curve,
    separatrix_energy,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_BAD_ARGS = 2
EXIT_GRID = 3
EXIT_SOLVER = 4

DEFAULT_X_MAX = 20.0
DEFAULT_POINTS = 4001

SWEEP_QUANTITIES = (
    "separatrix",
    "curvature",
    "gap",
    "maxima_count",
    "e0_error",
    "e1_error",
)

VERIFY_TOLERANCES = {
    "e0_error": 1e-4,
    "e1_error": 1e-4,
    "overlap_min": 0.99999,
    "residual_max": 5e-5,
    "intertwining_max": 1e-4,
    "bimodality_rel_err": 1e-5,
}


def _fmt(value) -> str:
    """Shortest round-trip decimal for floats; plain str otherwise."""
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _csv(header: Sequence[str], rows, comments: Sequence[str] = (),
         footer: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    lines.extend(f"# {c}" for c in footer)
    return "\n".join(lines) + "\n"


def _columns_json(header: Sequence[str], rows) -> str:
    cols: Dict[str, list] = {name: [] for name in header}
    for row in rows:
        for name, value in zip(header, row):
            cols[name].append(float(value) if isinstance(value, np.floating) else value)
    return json.dumps(cols) + "\n"


def _emit_table(args, header, rows, comments=(), footer=()) -> None:
    if args.format == "json":
        _write_text(args.out, _columns_json(header, rows))
    else:
        _write_text(args.out, _csv(header, rows, comments, footer))


def _write_svg(path: str, xs: np.ndarray, ys: np.ndarray) -> None:
    """Minimal 800x600 polyline rendering with autoscaled axes."""
    width, height, margin = 800, 600, 40
    x0, x1 = float(np.min(xs)), float(np.max(xs))
    y0, y1 = float(np.min(ys)), float(np.max(ys))
    xspan = (x1 - x0) or 1.0
    yspan = (y1 - y0) or 1.0
    pts = []
    for x, y in zip(xs, ys):
        px = margin + (x - x0) / xspan * (width - 2 * margin)
        py = height - margin - (y - y0) / yspan * (height - 2 * margin)
        pts.append(f"{px:.2f},{py:.2f}")
    svg = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">\n'
        f'<polyline fill="none" stroke="black" stroke-width="1" '
        f'points="{" ".join(pts)}"/>\n</svg>\n'
    )
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(svg)


def _load_config(path: Optional[str]) -> Dict[str, str]:
    """key=value config file; '#' comments; dashes and underscores equivalent."""
    if path is None:
        return {}
    config: Dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"malformed config line: {raw.strip()!r}")
            key, value = line.split("=", 1)
            config[key.strip().replace("-", "_")] = value.strip()
    return config


def _resolve(args, config: Dict[str, str], key: str, cast, fallback):
    """Flag wins over config file wins over built-in default."""
    flag = getattr(args, key, None)
    if flag is not None:
        return flag
    if key in config:
        return cast(config[key])
    return fallback


def _grid_from(args, config) -> Grid:
    x_max = _resolve(args, config, "x_max", float, DEFAULT_X_MAX)
    points = _resolve(args, config, "points", int, DEFAULT_POINTS)
    return Grid.symmetric(x_max, points)


def _epsilon_from(args, config) -> float:
    eps = _resolve(args, config, "epsilon", float, None)
    if eps is None:
        raise InvalidEpsilon("--epsilon is required (eps < -1)")
    return float(eps)


def cmd_potential(args, config) -> int:
    eps = _epsilon_from(args, config)
    grid = _grid_from(args, config)
    curve = potential_curve(eps, grid)
    rows = zip(grid.x, curve.values)
    _emit_table(args, ("x", "V"), rows)
    if args.svg:
        _write_svg(args.svg, grid.x, curve.values)
    return EXIT_OK


def cmd_states(args, config) -> int:
    eps = _epsilon_from(args, config)
    grid = _grid_from(args, config)
    curve = potential_curve(eps, grid)
    psi0 = ground_state(eps, grid).samples
    psi1 = excited_state(eps, grid).samples
    rows = zip(grid.x, curve.values, psi0, psi1, psi0**2)
    _emit_table(args, ("x", "V", "psi0", "psi1", "rho0"), rows)
    return EXIT_OK


def _intertwining_family_residual(eps: float, grid: Grid) -> float:
    """Max intertwining residual over a fixed family of Gaussian bumps."""
    rng = np.random.default_rng(42)
    worst = 0.0
    for _ in range(5):
        center = rng.uniform(-3.0, 3.0)
        width = rng.uniform(0.5, 2.0)
        bump = RealWave(grid, np.exp(-((grid.x - center) / width) ** 2))
        worst = max(worst, oracle.check_intertwining(eps, bump))
    return worst


def cmd_verify(args, config) -> int:
    eps = _epsilon_from(args, config)
    grid = _grid_from(args, config)
    report = oracle.verify_spectrum(eps, grid)
    intertwining = _intertwining_family_residual(eps, grid)
    lhs, rhs, rel_err = wells.check_bimodality_relation(eps, grid)

    tol = VERIFY_TOLERANCES
    checks = [
        report.e0_error < tol["e0_error"],
        report.e1_error < tol["e1_error"],
        report.psi0_overlap > tol["overlap_min"],
        report.psi1_overlap > tol["overlap_min"],
        report.psi0_residual < tol["residual_max"],
        report.psi1_residual < tol["residual_max"],
        intertwining < tol["intertwining_max"],
    ]
    # bimodality check is singular where ground level meets the barrier top
    if abs(separatrix_energy(eps) - eps) > 1e-3:
        checks.append(rel_err < tol["bimodality_rel_err"])
    passed = all(checks)

    payload = {
        "epsilon": report.epsilon,
        "e0_analytic": report.e0_analytic,
        "e1_analytic": report.e1_analytic,
        "e0_numeric": report.e0_numeric,
        "e1_numeric": report.e1_numeric,
        "e0_error": report.e0_error,
        "e1_error": report.e1_error,
        "psi0_residual": report.psi0_residual,
        "psi1_residual": report.psi1_residual,
        "psi0_overlap": report.psi0_overlap,
        "psi1_overlap": report.psi1_overlap,
        "gap_numeric": report.e1_numeric - report.e0_numeric,
        "intertwining_residual": intertwining,
        "bimodality_lhs": lhs,
        "bimodality_rhs": rhs,
        "bimodality_rel_err": rel_err,
        "passed": passed,
    }
    _write_text(args.out, json.dumps(payload, indent=2) + "\n")
    return EXIT_OK if passed else EXIT_VERIFY_FAIL


def cmd_classify(args, config) -> int:
    eps = _epsilon_from(args, config)
    grid = _grid_from(args, config)
    result = wells.classify(eps, grid)
    if args.format == "json":
        payload = {
            "epsilon": result.epsilon,
            "kind": result.kind.value,
            "separatrix": result.separatrix,
            "curvature_origin": result.curvature_origin,
            "density_maxima_count": result.density_maxima_count,
        }
        _write_text(args.out, json.dumps(payload) + "\n")
        return EXIT_OK
    kind = result.kind
    if kind is wells.WellKind.DOUBLE_WELL_GROUND_BELOW_SEPARATRIX:
        verdict = "double well; ground BELOW separatrix"
    elif kind is wells.WellKind.DOUBLE_WELL_GROUND_ABOVE_SEPARATRIX:
        verdict = "double well; ground ABOVE separatrix"
    elif kind is wells.WellKind.BOUNDARY:
        verdict = "boundary case"
    else:
        verdict = "not a double well"
    line = (
        f"{verdict}; s={result.separatrix:.6g}; "
        f"curvature={result.curvature_origin:.6g}; "
        f"maxima={result.density_maxima_count}\n"
    )
    _write_text(args.out, line)
    return EXIT_OK


def cmd_evolve(args, config) -> int:
    eps = _epsilon_from(args, config)
    grid = _grid_from(args, config)
    t_max = _resolve(args, config, "t_max", float, None)
    frames = _resolve(args, config, "frames", int, 201)
    if t_max is None:
        t_max = 2.0 * dynamics.analytic_period(eps)
    series = dynamics.evolve_series(eps, grid, t_max, frames)
    comments = []
    if separatrix_energy(eps) <= eps:
        comments.append(
            "warning: ground level at or above the central barrier; "
            "no low-lying two-level regime"
        )
    rows = zip(series.times, series.left_probability)
    footer = [f"analytic_period={_fmt(series.analytic_period)}"]
    _emit_table(args, ("t", "P_left"), rows, comments=comments, footer=footer)
    if args.svg:
        _write_svg(args.svg, series.times, series.left_probability)
    return EXIT_OK


def _sweep_row(eps: float, grid: Grid, quantities: List[str]) -> tuple:
    from .transform import curvature_at_origin

    values = {}
    needs_oracle = any(q in ("e0_error", "e1_error") for q in quantities)
    for q in quantities:
        if q == "separatrix":
            values[q] = separatrix_energy(eps)
        elif q == "curvature":
            values[q] = curvature_at_origin(eps)
        elif q == "gap":
            values[q] = abs(1.0 + eps)
        elif q == "maxima_count":
            values[q] = wells.classify(eps, grid).density_maxima_count
    if needs_oracle:
        report = oracle.verify_spectrum(eps, grid)
        if "e0_error" in quantities:
            values["e0_error"] = report.e0_error
        if "e1_error" in quantities:
            values["e1_error"] = report.e1_error
    return tuple(values[q] for q in quantities)


def cmd_sweep(args, config) -> int:
    eps_start = _resolve(args, config, "eps_start", float, None)
    eps_end = _resolve(args, config, "eps_end", float, None)
    steps = _resolve(args, config, "steps", int, None)
    if eps_start is None or eps_end is None or steps is None or steps < 1:
        print("sweep requires --eps-start, --eps-end and --steps >= 1",
              file=sys.stderr)
        return EXIT_BAD_ARGS
    if not eps_start < eps_end or eps_end > -1.0 - 1e-9:
        print("sweep range must satisfy eps_start < eps_end <= -1 - 1e-9",
              file=sys.stderr)
        return EXIT_BAD_ARGS
    raw = _resolve(args, config, "quantities", str, "separatrix,curvature,gap")
    quantities = [q.strip() for q in raw.split(",") if q.strip()]
    bad = [q for q in quantities if q not in SWEEP_QUANTITIES]
    if bad or not quantities:
        print(f"unknown sweep quantities: {', '.join(bad) or '(none given)'}; "
              f"choose from {', '.join(SWEEP_QUANTITIES)}", file=sys.stderr)
        return EXIT_BAD_ARGS

    grid = _grid_from(args, config)
    eps_values = np.linspace(eps_start, eps_end, steps)
    rows = []
    failures = 0
    for eps in eps_values:
        try:
            rows.append((float(eps),) + _sweep_row(float(eps), grid, quantities))
        except (GridTooNarrow, oracle.ConvergenceFailure,
                oracle.BoundStateCountMismatch) as exc:
            print(f"warning: eps={eps}: {exc}", file=sys.stderr)
            rows.append((float(eps),) + (float("nan"),) * len(quantities))
            failures += 1
    _emit_table(args, ("epsilon", *quantities), rows)
    if failures == len(eps_values):
        return EXIT_SOLVER
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser, epsilon: bool = True) -> None:
    if epsilon:
        parser.add_argument("--epsilon", type=float, default=None,
                            help="factorization energy (must be < -1)")
    parser.add_argument("--x-max", dest="x_max", type=float, default=None,
                        help="half-width of the symmetric grid (default 20)")
    parser.add_argument("--points", type=int, default=None,
                        help="odd number of grid nodes (default 4001)")
    parser.add_argument("--out", default=None, help="output path ('-' = stdout)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--config", default=None,
                        help="key=value config file; flags take precedence")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shallowdw",
        description="Exactly soluble shallow double wells: closed-form states, "
                    "eigensolver verification, classification and dynamics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("potential", help="emit x,V samples")
    _add_common(p)
    p.add_argument("--svg", default=None, help="also write an SVG polyline")
    p.set_defaults(func=cmd_potential)

    p = sub.add_parser("states", help="emit x,V,psi0,psi1,rho0 samples")
    _add_common(p)
    p.set_defaults(func=cmd_states)

    p = sub.add_parser("verify", help="JSON spectrum-verification report")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="interval taxonomy verdict")
    _add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("evolve", help="left-well probability time series")
    _add_common(p)
    p.add_argument("--t-max", dest="t_max", type=float, default=None,
                   help="final time (default: two oscillation periods)")
    p.add_argument("--frames", type=int, default=None,
                   help="number of uniform time samples (default 201)")
    p.add_argument("--svg", default=None, help="also write an SVG polyline")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("sweep", help="tabulate quantities over an eps range")
    _add_common(p, epsilon=False)
    p.add_argument("--eps-start", dest="eps_start", type=float, default=None)
    p.add_argument("--eps-end", dest="eps_end", type=float, default=None)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--quantities", default=None,
                   help=f"comma-separated subset of {','.join(SWEEP_QUANTITIES)}")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args.config)
        return args.func(args, config)
    except GridTooNarrow as exc:
        # subclasses ValueError; must be caught before the bad-args handler
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GRID
    except (InvalidEpsilon, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS
    except oracle.ConvergenceFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except oracle.BoundStateCountMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAIL


if __name__ == "__main__":
    sys.exit(main())
