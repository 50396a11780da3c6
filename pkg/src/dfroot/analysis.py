"""Budgeted iteration runs and convergence-order estimates."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import mpmath
from mpmath import mpf

from .corpus import Problem, refine_root
from .errors import InsufficientTrace, ZeroError
from .numerics import PrecisionContext
from .schemes import MethodConfig, Scheme, Status, step

# Errors below 10**-(digits - FLOOR_GUARD) are rounding noise, not signal.
FLOOR_GUARD = 50


class TraceStatus(str, enum.Enum):
    COMPLETED = "Completed"
    CONVERGED_EXACTLY = "ConvergedExactly"
    DEGENERATE = "Degenerate"


@dataclass
class IterationTrace:
    iterates: list
    errors: list
    digits: int
    total_evals: int = 0
    status: TraceStatus = TraceStatus.COMPLETED
    step_evals: list = field(default_factory=list)

    @property
    def at_floor(self) -> list[bool]:
        """Per-iterate flag: error has sunk below the working-precision floor."""
        floor = precision_floor(self.digits)
        return [e < floor for e in self.errors]

    @property
    def final_error(self) -> mpf:
        return self.errors[-1]

    @property
    def iterations(self) -> int:
        return len(self.iterates) - 1


def precision_floor(digits: int) -> mpf:
    return mpf(10) ** (-(digits - FLOOR_GUARD))


def run_budgeted(cfg: MethodConfig, p: Problem, budget: int, ctx: PrecisionContext,
                 x0=None) -> IterationTrace:
    """Iterate from ``p``'s start point while a full step fits in ``budget``.

    Every iterate, ``x0`` included, is recorded with its absolute error
    against the refined root.
    """
    if budget < cfg.cost:
        raise ValueError(f"budget {budget} is below one {cfg.label} step ({cfg.cost} evaluations)")
    alpha = p.alpha_refined if p.alpha_refined is not None else refine_root(p, ctx)
    df = p.derivative if cfg.scheme is Scheme.NEWTON else None
    with ctx.working():
        alpha = +alpha
        x = p.start(ctx) if x0 is None else +mpf(x0)
        trace = IterationTrace([x], [abs(x - alpha)], ctx.digits)
        while trace.total_evals + cfg.cost <= budget:
            res = step(p.evaluate, x, cfg, df=df)
            trace.total_evals += res.evals_used
            trace.step_evals.append(res.evals_used)
            if res.status is Status.DEGENERATE:
                trace.status = TraceStatus.DEGENERATE
                break
            if res.status is Status.CONVERGED_EXACTLY:
                trace.status = TraceStatus.CONVERGED_EXACTLY
                if res.next_x != x:
                    trace.iterates.append(res.next_x)
                    trace.errors.append(abs(res.next_x - alpha))
                break
            x = res.next_x
            trace.iterates.append(x)
            trace.errors.append(abs(x - alpha))
    return trace


def _usable_errors(errors, digits: int) -> list:
    """Errors up to (excluding) the first one at the precision floor."""
    floor = precision_floor(digits)
    out = []
    for e in errors:
        if e < floor:
            if e == 0 and len(out) < 3:
                raise ZeroError("an iterate hit the root exactly; order is undefined")
            break
        out.append(e)
    return out


def _errors_for(trace: IterationTrace, alpha) -> list:
    if alpha is None:
        return list(trace.errors)
    with mpmath.workdps(trace.digits):
        return [abs(x - alpha) for x in trace.iterates]


def coc(trace: IterationTrace, alpha=None) -> mpf:
    """Computational order of convergence from the last three usable iterates.

    ``ln(e[n+1]/e[n]) / ln(e[n]/e[n-1])``. Iterates whose error is below the
    precision floor are excluded, so the estimate never mixes in rounding noise.
    """
    with mpmath.workdps(trace.digits):
        errs = _usable_errors(_errors_for(trace, alpha), trace.digits)
        if len(errs) < 3:
            raise InsufficientTrace(f"need 3 usable iterates, have {len(errs)}")
        e0, e1, e2 = errs[-3:]
        den = mpmath.log(e1 / e0)
        if den == 0:
            raise InsufficientTrace("stagnant errors; order undefined")
        return mpmath.log(e2 / e1) / den


def fit_order(trace: IterationTrace, alpha=None) -> mpf:
    """Least-squares slope of ``ln e[n+1]`` against ``ln e[n]`` over all usable pairs."""
    with mpmath.workdps(trace.digits):
        errs = _usable_errors(_errors_for(trace, alpha), trace.digits)
        if len(errs) < 3:
            raise InsufficientTrace(f"need 3 usable iterates, have {len(errs)}")
        logs = [mpmath.log(e) for e in errs]
        xs, ys = logs[:-1], logs[1:]
        n = len(xs)
        mx, my = sum(xs) / n, sum(ys) / n
        sxx = sum((a - mx) ** 2 for a in xs)
        if sxx == 0:
            raise InsufficientTrace("errors do not vary; slope undefined")
        return sum((a - mx) * (b - my) for a, b in zip(xs, ys)) / sxx
