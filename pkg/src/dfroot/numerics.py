"""Arbitrary-precision real numbers.

Values are plain :class:`mpmath.mpf` objects. Precision is a property of the
active mpmath context rather than of each value, so a :class:`PrecisionContext`
is entered around any computation that must run at a given number of decimal
digits::

    ctx = PrecisionContext(300)
    with ctx.working():
        x = parse_real("2.35e-1143", ctx)
"""
from __future__ import annotations

import re
from dataclasses import dataclass

import mpmath
from mpmath import mpf
from mpmath.libmp import repr_dps

from .errors import MalformedLiteral

Real = mpf

MIN_DIGITS = 50
DEFAULT_DIGITS = 2048

_LITERAL = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision in decimal digits."""

    digits: int = DEFAULT_DIGITS

    def __post_init__(self):
        if not isinstance(self.digits, int) or self.digits < MIN_DIGITS:
            raise ValueError(f"precision must be an integer >= {MIN_DIGITS} digits, got {self.digits!r}")

    def working(self):
        """Context manager that sets mpmath's working precision to ``digits``."""
        return mpmath.workdps(self.digits)

    def floor(self, guard: int = 0) -> mpf:
        """``10**-(digits - guard)``, evaluated at the current precision."""
        return mpf(10) ** (-(self.digits - guard))


def parse_real(text: str, ctx: PrecisionContext) -> mpf:
    """Parse a signed decimal literal, rounding to ``ctx.digits``.

    Only plain decimal syntax is accepted; mpmath's extras such as ``inf``,
    ``nan`` or fractions are rejected.
    """
    if not isinstance(text, str) or not _LITERAL.fullmatch(text.strip()):
        raise MalformedLiteral(f"not a decimal literal: {text!r}")
    with ctx.working():
        return +mpf(text.strip())


def serialize_real(x, ctx: PrecisionContext) -> str:
    """Decimal string that parses back to exactly ``x`` at ``ctx.digits``."""
    with ctx.working():
        x = +mpf(x)
        return mpmath.nstr(x, repr_dps(mpmath.mp.prec), strip_zeros=True,
                           min_fixed=-4, max_fixed=16)


def approx_eq(a, b, tol_digits: int) -> bool:
    """True iff ``|a - b| <= 10**-tol_digits * max(1, |a|, |b|)``.

    Scaling by the larger magnitude keeps the test symmetric in ``a`` and ``b``.
    """
    a, b = mpf(a), mpf(b)
    scale = max(mpf(1), abs(a), abs(b))
    return abs(a - b) <= mpf(10) ** (-tol_digits) * scale


def is_finite(x) -> bool:
    return mpmath.isfinite(x)
