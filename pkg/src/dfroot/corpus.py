"""The thirteen benchmark equations, their roots and starting points."""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import mpmath
from mpmath import cos, exp, log, mpf, sin

from .errors import NoConvergence, UnknownProblem
from .numerics import PrecisionContext, parse_real

RealMap = Callable[[mpf], mpf]

REFINE_MAX_ITER = 200
# residual bound is 10**-(digits - RESIDUAL_SLACK)
RESIDUAL_SLACK = 20
_GUARD_DIGITS = 20


@dataclass(frozen=True)
class Problem:
    id: str
    expression: str
    evaluate: RealMap
    derivative: RealMap
    alpha_hint: str
    x0: str
    exact_root: bool = False
    alpha_refined: Optional[mpf] = None

    def __call__(self, x):
        return self.evaluate(x)

    def start(self, ctx: PrecisionContext) -> mpf:
        return parse_real(self.x0, ctx)

    def with_refined_root(self, ctx: PrecisionContext) -> "Problem":
        return dataclasses.replace(self, alpha_refined=refine_root(self, ctx))


def _f1(x):
    return exp(x) * sin(x) + log(1 + x**2)


def _d1(x):
    return exp(x) * (sin(x) + cos(x)) + 2 * x / (1 + x**2)


def _f2(x):
    return x**15 + x**4 + 4 * x**2 - 15


def _d2(x):
    return 15 * x**14 + 4 * x**3 + 8 * x


def _f3(x):
    return (x - 2) * (x**10 + x + 1) * exp(-x - 1)


def _d3(x):
    p = x**10 + x + 1
    return exp(-x - 1) * (p + (x - 2) * (10 * x**9 + 1) - (x - 2) * p)


def _f4(x):
    return exp(-x**2 + x + 2) - cos(x + 1) + x**3 + 1


def _d4(x):
    return (1 - 2 * x) * exp(-x**2 + x + 2) + sin(x + 1) + 3 * x**2


def _f5(x):
    return (x + 1) * exp(sin(x)) - x**2 * exp(cos(x)) - 1


def _d5(x):
    return (exp(sin(x)) * (1 + (x + 1) * cos(x))
            - exp(cos(x)) * (2 * x - x**2 * sin(x)))


def _f6(x):
    return sin(x)**2 - x**2 + 1


def _d6(x):
    return 2 * sin(x) * cos(x) - 2 * x


def _f7(x):
    return 10 * exp(-x**2) - 1


def _d7(x):
    return -20 * x * exp(-x**2)


def _f8(x):
    return 1 / (x**2 - 1) - 1


def _d8(x):
    return -2 * x / (x**2 - 1)**2


def _f9(x):
    return log(x**2 + x + 2) - x + 1


def _d9(x):
    return (2 * x + 1) / (x**2 + x + 2) - 1


def _f10(x):
    return cos(x)**2 - x / 5


def _d10(x):
    return -2 * cos(x) * sin(x) - mpf(1) / 5


def _f11(x):
    return sin(x) - x / 2


def _d11(x):
    return cos(x) - mpf(1) / 2


def _f12(x):
    return x**10 - 2 * x**3 - x + 1


def _d12(x):
    return 10 * x**9 - 6 * x**2 - 1


def _f13(x):
    return exp(sin(x)) - x + 1


def _d13(x):
    return exp(sin(x)) * cos(x) - 1


PROBLEMS: dict[str, Problem] = {p.id: p for p in [
    Problem("f1", "exp(x) sin(x) + ln(1 + x^2)", _f1, _d1, "0", "0.25", exact_root=True),
    Problem("f2", "x^15 + x^4 + 4x^2 - 15", _f2, _d2, "1.148538", "1.1"),
    Problem("f3", "(x - 2)(x^10 + x + 1) exp(-x - 1)", _f3, _d3, "2", "2.1", exact_root=True),
    Problem("f4", "exp(-x^2 + x + 2) - cos(x + 1) + x^3 + 1", _f4, _d4, "-1", "-0.5", exact_root=True),
    Problem("f5", "(x + 1) exp(sin(x)) - x^2 exp(cos(x)) - 1", _f5, _d5, "0", "0.25", exact_root=True),
    Problem("f6", "sin(x)^2 - x^2 + 1", _f6, _d6, "1.40449165", "1.2"),
    Problem("f7", "10 exp(-x^2) - 1", _f7, _d7, "1.517427", "2"),
    Problem("f8", "(x^2 - 1)^-1 - 1", _f8, _d8, "1.414214", "1.7"),
    Problem("f9", "ln(x^2 + x + 2) - x + 1", _f9, _d9, "4.15259074", "4.4"),
    Problem("f10", "cos(x)^2 - x/5", _f10, _d10, "1.08598268", "1.5"),
    Problem("f11", "sin(x) - x/2", _f11, _d11, "0", "0.25", exact_root=True),
    Problem("f12", "x^10 - 2x^3 - x + 1", _f12, _d12, "0.591448093", "0.25"),
    Problem("f13", "exp(sin(x)) - x + 1", _f13, _d13, "2.63066415", "2.0"),
]}

PROBLEM_IDS = tuple(PROBLEMS)


def get_problem(pid: str) -> Problem:
    try:
        return PROBLEMS[pid]
    except KeyError:
        raise UnknownProblem(f"unknown problem {pid!r}; expected one of {', '.join(PROBLEM_IDS)}") from None


def refine_root(p: Problem, ctx: PrecisionContext) -> mpf:
    """Root of ``p`` to ``ctx.digits`` digits.

    Newton's method with a central-difference slope (step ``10**-(digits/2)``)
    seeded at the tabulated root. Exactly stated roots are returned as-is.
    """
    registered = PROBLEMS.get(p.id) is p
    root = _refine_cached(p.id, ctx.digits) if registered else _refine(p, ctx.digits)
    with ctx.working():
        return +root


@lru_cache(maxsize=None)
def _refine_cached(pid: str, digits: int) -> mpf:
    return _refine(get_problem(pid), digits)


def _refine(p: Problem, digits: int) -> mpf:
    ctx = PrecisionContext(digits)
    if p.exact_root:
        return parse_real(p.alpha_hint, ctx)
    bound = ctx.floor(RESIDUAL_SLACK)
    with mpmath.workdps(digits + _GUARD_DIGITS):
        x = mpf(p.alpha_hint)
        h = mpf(10) ** (-(digits // 2))
        for _ in range(REFINE_MAX_ITER):
            slope = (p.evaluate(x + h) - p.evaluate(x - h)) / (2 * h)
            step = p.evaluate(x) / slope
            x -= step
            if abs(step) <= abs(x) * mpf(10) ** (-(digits + _GUARD_DIGITS // 2)):
                break
    with ctx.working():
        x = +x
        if abs(p.evaluate(x)) > bound:
            raise NoConvergence(f"{p.id}: root refinement did not reach |f| <= {mpmath.nstr(bound, 3)}")
        return x
