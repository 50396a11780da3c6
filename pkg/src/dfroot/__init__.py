"""Arbitrary-precision eighth-order derivative-free root finders.

The core is a four-evaluation family of iterations (Steffensen first step,
weighted second and third steps, cubic-interpolation derivative in the last
step) together with classical comparators, a corpus of thirteen test
equations and a harness that regenerates the published comparison table.
"""
from .analysis import IterationTrace, coc, fit_order, run_budgeted
from .corpus import PROBLEM_IDS, Problem, get_problem, refine_root
from .numerics import PrecisionContext, approx_eq, parse_real, serialize_real
from .schemes import (MethodConfig, Scheme, Status, StepResult, family_iterate,
                      make_named_config, method_config, step)

__version__ = "0.1.0"

__all__ = [
    "IterationTrace", "MethodConfig", "PROBLEM_IDS", "PrecisionContext", "Problem",
    "Scheme", "Status", "StepResult", "approx_eq", "coc", "family_iterate", "fit_order",
    "get_problem", "make_named_config", "method_config", "parse_real", "refine_root",
    "run_budgeted", "serialize_real", "step",
]
