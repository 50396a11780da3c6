"""Divided differences and the cubic-interpolation derivative estimate."""
from __future__ import annotations

from dataclasses import dataclass

import mpmath
from mpmath import mpf

from ..errors import DegenerateNodes


def divided_difference(f, p, q, fp=None, fq=None) -> mpf:
    """Secant slope ``(f(p) - f(q)) / (p - q)``.

    Already-known values ``fp``/``fq`` may be passed to avoid re-evaluating f;
    the schemes always do so. The result is exactly symmetric in ``p``, ``q``
    because swapping negates numerator and denominator.
    """
    if p == q:
        raise DegenerateNodes(f"coincident nodes p = q = {mpmath.nstr(p, 10)}")
    if fp is None:
        fp = f(p)
    if fq is None:
        fq = f(q)
    return (fp - fq) / (p - q)


@dataclass(frozen=True)
class IterateFrame:
    x: mpf
    w: mpf
    y: mpf
    z: mpf
    fx: mpf
    fw: mpf
    fy: mpf
    fz: mpf


@dataclass(frozen=True)
class InterpSystem:
    """Offsets from ``y`` of the other three nodes and their values.

    The interpolating cubic is ``p(t) = f(y) + r1 (t-y) + r2 (t-y)^2 + r3 (t-y)^3``.
    """

    a: mpf
    b: mpf
    c: mpf
    v1: mpf
    v2: mpf
    v3: mpf

    @classmethod
    def from_frame(cls, fr: IterateFrame) -> "InterpSystem":
        return cls(a=fr.x - fr.y, b=fr.z - fr.y, c=fr.w - fr.y,
                   v1=fr.fx - fr.fy, v2=fr.fz - fr.fy, v3=fr.fw - fr.fy)

    def check_nodes(self):
        a, b, c = self.a, self.b, self.c
        if a == 0 or b == 0 or c == 0 or a == b or a == c or b == c:
            raise DegenerateNodes("interpolation nodes are not pairwise distinct")

    def coefficients(self) -> tuple[mpf, mpf, mpf]:
        """Solve the 3x3 Vandermonde-type system for ``(r1, r2, r3)``."""
        self.check_nodes()
        a, b, c = self.a, self.b, self.c
        # divide row k by its node: r1 + r2 t + r3 t^2 = v/t, then Newton form
        da, db, dc = self.v1 / a, self.v2 / b, self.v3 / c
        dab = (da - db) / (a - b)
        dbc = (db - dc) / (b - c)
        r3 = (dab - dbc) / (a - c)
        r2 = dab - r3 * (a + b)
        r1 = da - r2 * a - r3 * a**2
        return r1, r2, r3

    def derivative_at_z(self) -> mpf:
        """Closed-form derivative of the interpolating cubic at ``z = y + b``."""
        self.check_nodes()
        a, b, c = self.a, self.b, self.c
        return (b * (b - c) / ((a - b) * (a - c)) * (self.v1 / a)
                + (-3 * b**2 + 2 * b * c + 2 * a * b - a * c) / ((a - b) * (b - c)) * (self.v2 / b)
                + b * (b - a) / ((a - c) * (b - c)) * (self.v3 / c))


def psi_derivative_estimate(frame: IterateFrame) -> mpf:
    """Derivative at ``z`` of the cubic through the four frame points."""
    return InterpSystem.from_frame(frame).derivative_at_z()
