"""Iteration maps: the eighth-order family, its weights, and comparators."""
from __future__ import annotations

from mpmath import mpf

from .comparators import (kung_traub_iterate, newton_iterate, petkovic_iterate,
                          steffensen_iterate, thukral_iterate, thukral_phis)
from .config import (COMPARATOR_NAMES, FAMILY_NAMES, METHOD_NAMES, MethodConfig, Scheme,
                     Status, StepResult, make_named_config, method_config)
from .family import family_iterate
from .interp import (InterpSystem, IterateFrame, divided_difference,
                     psi_derivative_estimate)
from .weights import (WeightReport, check_weight_conditions, eval_weight_G,
                      eval_weight_H)

_THUKRAL = {Scheme.THUKRAL_M1: 1, Scheme.THUKRAL_M2: 2, Scheme.THUKRAL_M3: 3}
_PETKOVIC = {Scheme.PETKOVIC_1: 1, Scheme.PETKOVIC_2: 2}


def step(f, x, cfg: MethodConfig, df=None) -> StepResult:
    """Apply one step of whichever scheme ``cfg`` selects."""
    s = cfg.scheme
    if s is Scheme.FAMILY:
        return family_iterate(f, x, cfg)
    if s is Scheme.STEFFENSEN:
        return steffensen_iterate(f, x, cfg.param("kappa"))
    if s is Scheme.NEWTON:
        if df is None:
            raise ValueError("Newton needs a derivative closure")
        return newton_iterate(f, df, mpf(x))
    if s is Scheme.KUNG_TRAUB:
        return kung_traub_iterate(f, x, cfg.param("beta"))
    if s in _THUKRAL:
        return thukral_iterate(f, x, cfg.param("beta"), _THUKRAL[s])
    return petkovic_iterate(f, x, cfg.param("beta"), _PETKOVIC[s])


__all__ = [
    "COMPARATOR_NAMES", "FAMILY_NAMES", "METHOD_NAMES", "InterpSystem", "IterateFrame",
    "MethodConfig", "Scheme", "Status", "StepResult", "WeightReport",
    "check_weight_conditions", "divided_difference", "eval_weight_G", "eval_weight_H",
    "family_iterate", "kung_traub_iterate", "make_named_config", "method_config",
    "newton_iterate", "petkovic_iterate", "psi_derivative_estimate", "steffensen_iterate",
    "step", "thukral_iterate", "thukral_phis",
]
