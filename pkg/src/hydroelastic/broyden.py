"""Quasi-Newton rootfinding with rank-one Jacobian updates (good Broyden)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BlowupError, StagnationError


@dataclass(frozen=True)
class SolveReport:
    """Outcome of one solve; x is the final iterate whether or not converged."""

    converged: bool
    iterations: int
    residual_norm: float
    x: np.ndarray


def _check_finite(f: np.ndarray) -> None:
    if not np.all(np.isfinite(f)):
        raise BlowupError("residual became non-finite")


def finite_difference_jacobian(fn, x: np.ndarray, f0: np.ndarray | None = None, step: float = 1e-7) -> np.ndarray:
    """Forward-difference Jacobian with per-component step h_i = step*max(1, |x_i|)."""
    x = np.asarray(x, dtype=float)
    if f0 is None:
        f0 = np.asarray(fn(x), dtype=float)
    jac = np.empty((len(f0), len(x)))
    for i in range(len(x)):
        h = step * max(1.0, abs(x[i]))
        xp = x.copy()
        xp[i] += h
        jac[:, i] = (np.asarray(fn(xp), dtype=float) - f0) / h
    return jac


def broyden_solve(
    fn,
    x0: np.ndarray,
    tol: float = 1e-8,
    max_iter: int = 200,
    fd_step: float = 1e-7,
    backtracking: bool = True,
    jacobian: np.ndarray | None = None,
) -> SolveReport:
    """Solve fn(x) = 0 from x0; never mutates x0.

    The Jacobian estimate starts from forward finite differences (or the
    supplied ``jacobian``) and is updated by the good Broyden rank-one rule

        B <- B + ((dy - B dx) dx^T) / (dx^T dx).

    If a step increases the max-norm residual more than tenfold the step is
    halved, at most eight times, then taken anyway; the cap on iterations
    returns a non-converged report rather than raising.  Exhausted or
    singular updates raise StagnationError; non-finite residuals raise
    BlowupError.
    """
    x = np.array(x0, dtype=float)
    f = np.asarray(fn(x), dtype=float)
    _check_finite(f)
    norm = float(np.max(np.abs(f)))
    if norm <= tol:
        return SolveReport(True, 0, norm, x)

    if jacobian is None:
        b = finite_difference_jacobian(fn, x, f0=f, step=fd_step)
    else:
        b = np.array(jacobian, dtype=float)

    for iteration in range(1, max_iter + 1):
        try:
            dx_full = np.linalg.solve(b, -f)
        except np.linalg.LinAlgError as exc:
            raise StagnationError("singular Jacobian estimate") from exc

        scale = 1.0
        dx = dx_full
        f_new = np.asarray(fn(x + dx), dtype=float)
        _check_finite(f_new)
        if backtracking:
            halvings = 0
            while float(np.max(np.abs(f_new))) > 10.0 * norm and halvings < 8:
                scale *= 0.5
                halvings += 1
                dx = scale * dx_full
                f_new = np.asarray(fn(x + dx), dtype=float)
                _check_finite(f_new)

        denom = float(dx @ dx)
        if denom == 0.0:
            raise StagnationError("zero step in quasi-Newton update")
        dy = f_new - f
        b = b + np.outer(dy - b @ dx, dx) / denom

        x = x + dx
        f = f_new
        norm = float(np.max(np.abs(f)))
        if norm <= tol:
            return SolveReport(True, iteration, norm, x)

    return SolveReport(False, max_iter, norm, x)
