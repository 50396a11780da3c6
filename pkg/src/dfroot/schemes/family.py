"""The four-step, four-evaluation derivative-free family.

One step from ``x``::

    w = x - k f(x)
    y = x - k f(x)^2 / (f(x) - f(w))                      (Steffensen)
    z = y - k f(y) f(x) / (f(x) - f(w)) * G(t1, t2)      t1 = f(y)/f(x), t2 = f(y)/f(w)
    x' = z - f(z) / psi * H(s1, s2)                       s1 = f(z)/f(x), s2 = f(z)/f(w)

where ``psi`` is the derivative at ``z`` of the cubic interpolating f at
``x, w, y, z``. Any G with G(0,0) = 1 and unit first partials, and any H with
H(0,0) = 1 and zero first partials, give order eight.
"""
from __future__ import annotations

from mpmath import mpf

from ._guard import guarded_step
from .config import MethodConfig, Scheme, StepResult
from .interp import IterateFrame, psi_derivative_estimate
from .weights import eval_weight_G, eval_weight_H


def family_frame(ev, x, kappa, omega, g_kind) -> IterateFrame:
    fx = ev(x)
    w = x - kappa * fx
    fw = ev(w)
    denom = fx - fw
    y = x - kappa * fx**2 / denom
    fy = ev(y)
    z = y - kappa * fy * fx / denom * eval_weight_G(g_kind, omega, fy / fx, fy / fw)
    fz = ev(z)
    return IterateFrame(x, w, y, z, fx, fw, fy, fz)


def _family_body(ev, x, kappa, omega, g_kind, h_kind):
    fr = family_frame(ev, x, kappa, omega, g_kind)
    psi = psi_derivative_estimate(fr)
    return fr.z - fr.fz / psi * eval_weight_H(h_kind, fr.fz / fr.fx, fr.fz / fr.fw)


def family_iterate(f, x, cfg: MethodConfig) -> StepResult:
    if cfg.scheme is not Scheme.FAMILY:
        raise ValueError(f"family_iterate needs a Family config, got {cfg.scheme.value}")
    return guarded_step(_family_body, f, mpf(x), cfg.param("kappa"), cfg.param("omega"),
                        cfg.g_kind, cfg.h_kind)
