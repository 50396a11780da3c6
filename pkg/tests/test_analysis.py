import mpmath
import pytest
from mpmath import mpf

from dfroot.analysis import (FLOOR_GUARD, IterationTrace, TraceStatus, coc, fit_order,
                             precision_floor, run_budgeted)
from dfroot.corpus import Problem, get_problem
from dfroot.errors import InsufficientTrace, ZeroError
from dfroot.numerics import PrecisionContext
from dfroot.schemes import FAMILY_NAMES, method_config

CTX = PrecisionContext(2048)


def trace_of(errors, digits=300):
    with mpmath.workdps(digits):
        errs = [mpf(e) for e in errors]
    return IterationTrace(list(errs), errs, digits)


def test_coc_ideal_eighth_order(ctx300):
    assert mpmath.almosteq(coc(trace_of(["1e-2", "1e-16", "1e-128"])), 8, mpf(10) ** -250)


def test_coc_uses_last_three():
    # a slow start does not leak into the estimate
    t = trace_of(["0.5", "0.4", "1e-2", "1e-4", "1e-8"])
    with mpmath.workdps(300):
        assert mpmath.almosteq(coc(t), 2, mpf(10) ** -250)


def test_coc_too_short():
    with pytest.raises(InsufficientTrace):
        coc(trace_of(["1e-2", "1e-4"]))


def test_coc_exact_zero():
    with pytest.raises(ZeroError):
        coc(trace_of(["1e-2", "1e-4", "0"]))


def test_coc_skips_floor_values():
    digits = 300
    t = trace_of(["1e-2", "1e-4", "1e-8", "1e-270"], digits)
    assert t.at_floor == [False, False, False, True]
    with mpmath.workdps(digits):
        assert mpmath.almosteq(coc(t), 2, mpf(10) ** -250)
        assert precision_floor(digits) == mpf(10) ** -(digits - FLOOR_GUARD)


def test_coc_zero_after_enough_iterates():
    t = trace_of(["1e-2", "1e-4", "1e-8", "0"])
    with mpmath.workdps(300):
        assert mpmath.almosteq(coc(t), 2, mpf(10) ** -250)


def test_coc_stagnant():
    with pytest.raises(InsufficientTrace):
        coc(trace_of(["1e-3", "1e-3", "1e-5"]))


def test_fit_order_quadratic():
    t = trace_of(["1e-1", "1e-2", "1e-4", "1e-8", "1e-16"])
    with mpmath.workdps(300):
        assert mpmath.almosteq(fit_order(t), 2, mpf(10) ** -250)
    with pytest.raises(InsufficientTrace):
        fit_order(trace_of(["1e-1", "1e-2"]))


def test_coc_with_explicit_alpha(ctx300):
    xs = [mpf(1) + mpf(10) ** -k for k in (2, 6, 18)]
    t = IterationTrace(xs, [mpf(1)] * 3, 300)
    assert mpmath.almosteq(coc(t, alpha=1), 3, mpf(10) ** -250)


def test_budget_four_is_one_step():
    tr = run_budgeted(method_config("L1"), get_problem("f1"), 4, CTX)
    assert tr.iterations == 1 and tr.total_evals == 4 and tr.step_evals == [4]


def test_budget_below_cost():
    with pytest.raises(ValueError):
        run_budgeted(method_config("L1"), get_problem("f1"), 3, CTX)


def test_budget_leftover_unused():
    tr = run_budgeted(method_config("L1"), get_problem("f1"), 15, CTX)
    assert tr.iterations == 3 and tr.total_evals == 12


def test_steffensen_f8_trace_matches_hand_loop():
    ctx = PrecisionContext(500)
    p = get_problem("f8")
    tr = run_budgeted(method_config("Steffensen"), p, 12, ctx)
    assert tr.iterations == 6 and tr.status is TraceStatus.COMPLETED
    with ctx.working():
        k = mpf("0.01")
        x = mpf("1.7")
        for got in tr.iterates[1:]:
            fx = 1 / (x**2 - 1) - 1
            w = x - k * fx
            x = x - k * fx**2 / (fx - (1 / (w**2 - 1) - 1))
            assert got == x
        assert mpmath.almosteq(tr.final_error, abs(x - mpmath.sqrt(2)), mpf(10) ** -480)


def test_newton_custom_problem_quadratic():
    p = Problem("sq", "x^2 - 2", lambda t: t**2 - 2, lambda t: 2 * t, "1.41421356", "1.5")
    ctx = PrecisionContext(300)
    tr = run_budgeted(method_config("Newton"), p, 12, ctx)
    assert tr.iterations == 6
    assert 1.9 < coc(tr) < 2.1


def test_converged_exactly_trace():
    p = get_problem("f1")
    tr = run_budgeted(method_config("L1"), p, 12, CTX, x0="0")
    assert tr.status is TraceStatus.CONVERGED_EXACTLY
    assert tr.final_error == 0 and tr.total_evals == 1


def test_degenerate_trace_stops():
    p = Problem("flat", "5", lambda t: mpf(5), lambda t: mpf(0), "0", "1", exact_root=True)
    tr = run_budgeted(method_config("M2"), p, 12, PrecisionContext(100))
    assert tr.status is TraceStatus.DEGENERATE and tr.iterations == 0


@pytest.mark.slow
@pytest.mark.parametrize("name", FAMILY_NAMES)
@pytest.mark.parametrize("pid", ["f4", "f5", "f9", "f13"])
def test_family_coc_near_eight(name, pid):
    tr = run_budgeted(method_config(name), get_problem(pid), 16, CTX)
    assert tr.status is TraceStatus.COMPLETED
    assert 7.8 <= coc(tr) <= 8.2


def test_steffensen_coc_f8():
    tr = run_budgeted(method_config("Steffensen"), get_problem("f8"), 16, CTX)
    assert 1.9 <= coc(tr) <= 2.1


def test_f11_superconvergent():
    tr = run_budgeted(method_config("L1"), get_problem("f11"), 12, CTX)
    assert coc(tr) >= 8


def test_fit_order_close_to_coc():
    tr = run_budgeted(method_config("L1"), get_problem("f9"), 16, CTX)
    assert abs(fit_order(tr) - coc(tr)) < 0.2
