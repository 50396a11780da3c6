"""Shared step plumbing: evaluation counting, exact-root exits and
conversion of arithmetic breakdowns into a Degenerate status."""
from __future__ import annotations

import mpmath
from mpmath import mpf

from .config import Status, StepResult


class _HitRoot(Exception):
    def __init__(self, point):
        self.point = point


class CountingEval:
    """Wraps f, counting calls and bailing out on an exact zero."""

    def __init__(self, f):
        self.f = f
        self.count = 0

    def __call__(self, x):
        v = self.f(x)
        self.count += 1
        if v == 0:
            raise _HitRoot(x)
        return v


def _usable(v) -> bool:
    return isinstance(v, mpf) and mpmath.isfinite(v)


def guarded_step(body, f, x, *args) -> StepResult:
    """Run ``body(ev, x, *args) -> next_x`` with ``ev`` a :class:`CountingEval`."""
    ev = CountingEval(f)
    try:
        nx = body(ev, x, *args)
    except _HitRoot as hit:
        return StepResult(hit.point, ev.count, Status.CONVERGED_EXACTLY)
    except ZeroDivisionError:
        return StepResult(x, ev.count, Status.DEGENERATE)
    if not _usable(nx):
        return StepResult(x, ev.count, Status.DEGENERATE)
    return StepResult(nx, ev.count, Status.ADVANCED)
