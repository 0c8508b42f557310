"""Command-line front end.

Subcommands: analyze (mode table CSV), solve (single state), continue
(one branch), surface (branch family over sheet mass), converge
(two-resolution comparison).  Exit codes: 0 success, 1 usage/config error,
2 numerical failure (partial outputs are still written).
"""

from __future__ import annotations

import argparse
import dataclasses
import multiprocessing
import sys

import numpy as np

from . import io as io_mod
from . import linear
from .broyden import broyden_solve
from .config import ConfigError, RunConfig, build_config, load_config, make_seed
from .continuation import ContinuationPolicy, SurfaceRecord, continue_branch
from .errors import WaveError
from .model import GridSpec, SpectralWaveState, synthesize
from .residual import AmplitudeConstraint, residual_function
from .wilton import guess_displacement

USAGE_ERROR = 1
NUMERIC_ERROR = 2


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-c", "--config", default=None, help="key=value config file")
    parser.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="override one config key (repeatable)",
    )
    parser.add_argument("-o", "--out", required=True, help="output path")


def cmd_analyze(cfg: RunConfig, out: str) -> int:
    rows = []
    for k in range(1, cfg.analyze_kmax + 1):
        try:
            mode = linear.kernel_classify(k, cfg.params)
            rows.append(
                {
                    "k": k,
                    "lambda_at_cplus": mode.lam,
                    "c_plus": mode.c_plus,
                    "c_minus": mode.c_minus,
                    "R": mode.r_value,
                    "kernel_dim": mode.kernel_dim,
                    "partner": mode.partner,
                }
            )
        except WaveError:
            rows.append({"k": k, "R": linear.r_poly(k, cfg.params)})
    io_mod.save_mode_table(out, rows)
    return 0


def cmd_solve(cfg: RunConfig, out: str) -> int:
    seed = make_seed(cfg)
    target = cfg.solve_target
    if target is None:
        target = guess_displacement(seed, cfg.params)
    fn = residual_function(cfg.params, AmplitudeConstraint.displacement(target), cfg.grid)
    report = broyden_solve(
        fn,
        seed.pack(),
        tol=cfg.solver.tol,
        max_iter=cfg.solver.max_iter,
        fd_step=cfg.solver.fd_step,
        backtracking=cfg.solver.backtracking,
    )
    state = SpectralWaveState.unpack(report.x)
    io_mod.save_state(
        out,
        state,
        cfg.mapping,
        extra={
            "h": target,
            "converged": report.converged,
            "iterations": report.iterations,
            "residual_norm": report.residual_norm,
        },
    )
    return 0 if report.converged else NUMERIC_ERROR


def cmd_continue(cfg: RunConfig, out: str, csv: str | None) -> int:
    seed = make_seed(cfg)
    record = continue_branch(
        seed,
        cfg.params,
        cfg.policy,
        cfg.solver,
        cfg.grid,
        provenance=f"{cfg.guess_kind}:{cfg.guess_sign:+d}:eps={cfg.guess_eps:g}",
    )
    io_mod.save_branch(out, record, cfg.mapping)
    if csv:
        io_mod.branch_csv(csv, record)
    return 0 if record.points else NUMERIC_ERROR


def _surface_worker(args: tuple[dict, float]) -> dict:
    mapping, atilde = args
    cfg = build_config(mapping, [f"params.Atilde={atilde!r}"])
    try:
        seed = make_seed(cfg)
        record = continue_branch(
            seed, cfg.params, cfg.policy, cfg.solver, cfg.grid, provenance=f"Atilde={atilde:g}"
        )
    except WaveError:
        from .continuation import BranchRecord

        record = BranchRecord((), cfg.params, "solverFailure", f"Atilde={atilde:g}")
    return {"atilde": atilde, "record": record}


def cmd_surface(cfg: RunConfig, out: str, jobs: int) -> int:
    tasks = [(dict(cfg.mapping), atilde) for atilde in cfg.surface_atilde]
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_surface_worker, tasks)
    else:
        results = [_surface_worker(t) for t in tasks]
    surface = SurfaceRecord(
        cfg.params,
        tuple(r["atilde"] for r in results),
        tuple(r["record"] for r in results),
    )
    io_mod.save_surface(out, surface, cfg.mapping)
    return 0


def cmd_converge(cfg: RunConfig, out: str) -> int:
    """Same branch at n and 2n grid points, compared at shared h targets."""
    policy = dataclasses.replace(cfg.policy, grow=1.0, max_points=cfg.converge_points)
    seed = make_seed(cfg)
    coarse = continue_branch(seed, cfg.params, policy, cfg.solver, cfg.grid)
    shared = [p for p in coarse.points if p.param_id == "h"]
    if not shared:
        return NUMERIC_ERROR

    fine_grid = GridSpec(2 * cfg.grid_n)
    fine_modes = (fine_grid.n - 4) // 4
    pad = fine_modes - cfg.grid_modes

    def lift(state: SpectralWaveState) -> SpectralWaveState:
        return SpectralWaveState(
            np.concatenate([state.a, np.zeros(pad)]),
            np.concatenate([state.b, np.zeros(pad)]),
            state.c,
        )

    targets, c_lo, c_hi = [], [], []
    x = lift(make_seed(cfg)).pack()
    last_fine = None
    for point in shared:
        fn = residual_function(
            cfg.params, AmplitudeConstraint.displacement(point.h), fine_grid
        )
        try:
            report = broyden_solve(
                fn,
                x,
                tol=cfg.solver.tol,
                max_iter=cfg.solver.max_iter,
                fd_step=cfg.solver.fd_step,
                backtracking=cfg.solver.backtracking,
            )
        except WaveError:
            break
        if not report.converged:
            break
        x = report.x
        last_fine = SpectralWaveState.unpack(x)
        targets.append(point.h)
        c_lo.append(point.state.c)
        c_hi.append(last_fine.c)

    if last_fine is None:
        return NUMERIC_ERROR

    last_coarse = shared[len(targets) - 1].state
    data = {
        "config": dict(cfg.mapping),
        "n_low": cfg.grid_n,
        "n_high": fine_grid.n,
        "h": targets,
        "c_low": c_lo,
        "c_high": c_hi,
        "dc": [abs(a - b) for a, b in zip(c_lo, c_hi)],
        "spectrum_low": {
            "a": [float(v) for v in last_coarse.a],
            "b": [float(v) for v in last_coarse.b],
        },
        "spectrum_high": {
            "a": [float(v) for v in last_fine.a],
            "b": [float(v) for v in last_fine.b],
        },
    }
    io_mod.save_convergence(out, data)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="hydroelastic",
        description="Periodic interfacial hydroelastic traveling waves: "
        "linear mode analysis, nonlinear solves, branch continuation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("analyze", "solve", "continue", "surface", "converge"):
        p = sub.add_parser(name)
        _add_common(p)
        if name == "continue":
            p.add_argument("--csv", default=None, help="also export h,c rows as CSV")
        if name == "surface":
            p.add_argument("--jobs", type=int, default=1, help="parallel branch workers")

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage; map that onto our usage-error code
        # and keep 0 for --help so in-process callers see consistent returns.
        return 0 if exc.code == 0 else USAGE_ERROR

    try:
        cfg = load_config(args.config, args.overrides)
    except (ConfigError, OSError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return USAGE_ERROR

    try:
        if args.command == "analyze":
            return cmd_analyze(cfg, args.out)
        if args.command == "solve":
            return cmd_solve(cfg, args.out)
        if args.command == "continue":
            return cmd_continue(cfg, args.out, args.csv)
        if args.command == "surface":
            return cmd_surface(cfg, args.out, args.jobs)
        return cmd_converge(cfg, args.out)
    except WaveError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return NUMERIC_ERROR


if __name__ == "__main__":
    sys.exit(main())
