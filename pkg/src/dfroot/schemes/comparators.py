"""Baseline and comparator iterations.

Newton and Steffensen are the second-order baselines. The eighth-order
comparators (Kung-Traub, Thukral M1-M3, Petkovic-type P1/P2) all share the
Steffensen-like first substep with a forward node::

    w = x + b f(x),    y = x - b f(x)^2 / (f(w) - f(x))

Two printed formulas need repair to reach order eight; both repairs are
verified by reproducing the tabulated comparator errors at b = 1:

* Kung-Traub third step: the inverse-interpolation bracket is
  ``1/f[w,x] - 1/f[w,y]``.
* P2 fourth step: the correction factor is
  ``1 - f(y)^3/(f(w)^2 f(x)) - f(y)^3/(f(w) f(x)^2)``; with a 2 on the first
  cubic term the method is only seventh order.
"""
from __future__ import annotations

from mpmath import mpf

from ..errors import DegenerateNodes
from ._guard import guarded_step
from .config import StepResult
from .interp import divided_difference


def _dd(p, q, fp, fq):
    return divided_difference(None, p, q, fp, fq)


def _steffensen_body(ev, x, kappa):
    fx = ev(x)
    w = x - kappa * fx
    fw = ev(w)
    return x - kappa * fx**2 / (fx - fw)


def steffensen_iterate(f, x, kappa) -> StepResult:
    kappa = mpf(kappa)
    if kappa == 0:
        raise ValueError("kappa must be nonzero")
    return guarded_step(_steffensen_body, f, mpf(x), kappa)


def newton_iterate(f, df, x) -> StepResult:
    def body(ev, x):
        fx = ev(x)
        d = df(x)
        ev.count += 1
        if d == 0:
            raise DegenerateNodes("zero derivative")
        return x - fx / d

    return guarded_step(body, f, mpf(x))


def _forward_substep(ev, x, beta):
    fx = ev(x)
    w = x + beta * fx
    fw = ev(w)
    y = x - beta * fx**2 / (fw - fx)
    fy = ev(y)
    return fx, w, fw, y, fy


def _kung_traub_body(ev, x, beta):
    fx, w, fw, y, fy = _forward_substep(ev, x, beta)
    inv_wx = 1 / _dd(w, x, fw, fx)
    inv_wy = 1 / _dd(w, y, fw, fy)
    z = y - fx * fw / (fy - fx) * (inv_wx - inv_wy)
    fz = ev(z)
    inv_yz = 1 / _dd(y, z, fy, fz)
    bracket = (inv_yz - inv_wy) / (fz - fw) - (inv_wy - inv_wx) / (fy - fx)
    return z - fw * fx * fy / (fz - fx) * bracket


def kung_traub_iterate(f, x, beta) -> StepResult:
    return guarded_step(_kung_traub_body, f, mpf(x), _positive(beta))


def _thukral_phi(variant, x, w, y, fx, fw, fy):
    t = fy / fw
    if variant == 1:
        return 1 / (1 - t)
    if variant == 2:
        return 1 + t + t**2
    if variant == 3:
        return _dd(x, w, fx, fw) / _dd(w, y, fw, fy)
    raise ValueError(f"Thukral variant must be 1, 2 or 3, got {variant!r}")


def _final_secant_step(x, y, z, fx, fw, fy, fz, correction):
    fxy = _dd(x, y, fx, fy)
    return z - correction / (1 - fz / fw) * (fxy * fz / (_dd(y, z, fy, fz) * _dd(x, z, fx, fz)))


def _thukral_body(ev, x, beta, variant):
    fx, w, fw, y, fy = _forward_substep(ev, x, beta)
    phi = _thukral_phi(variant, x, w, y, fx, fw, fy)
    z = y - phi * fy / _dd(x, y, fx, fy)
    fz = ev(z)
    return _final_secant_step(x, y, z, fx, fw, fy, fz, 1 - fy**3 / (fw**2 * fx))


def thukral_iterate(f, x, beta, variant: int) -> StepResult:
    if variant not in (1, 2, 3):
        raise ValueError(f"Thukral variant must be 1, 2 or 3, got {variant!r}")
    return guarded_step(_thukral_body, f, mpf(x), _positive(beta), variant)


def _petkovic_body(ev, x, beta, variant):
    fx, w, fw, y, fy = _forward_substep(ev, x, beta)
    u, v = fy / fx, fy / fw
    newton_like = (w - x) * fy / (fw - fx)
    if variant == 1:
        z = y - (1 + v + u) * newton_like
        correction = 1 - 2 * fy**3 / (fw**2 * fx) - fy**3 / (fw * fx**2) - v**3
    else:
        z = y - (1 + u) / (1 - v) * newton_like
        correction = 1 - fy**3 / (fw**2 * fx) - fy**3 / (fw * fx**2)
    fz = ev(z)
    return _final_secant_step(x, y, z, fx, fw, fy, fz, correction)


def petkovic_iterate(f, x, beta, variant: int) -> StepResult:
    if variant not in (1, 2):
        raise ValueError(f"Petkovic variant must be 1 or 2, got {variant!r}")
    return guarded_step(_petkovic_body, f, mpf(x), _positive(beta), variant)


def thukral_phis(f, x, beta) -> tuple[mpf, mpf, mpf]:
    """The three third-step weights evaluated on one frame (diagnostic)."""
    beta = mpf(beta)
    fx = f(x)
    w = x + beta * fx
    fw = f(w)
    y = x - beta * fx**2 / (fw - fx)
    fy = f(y)
    return tuple(_thukral_phi(k, x, w, y, fx, fw, fy) for k in (1, 2, 3))


def _positive(beta):
    beta = mpf(beta)
    if beta <= 0:
        raise ValueError("beta must be positive")
    return beta

