"""Weight functions G(t1, t2) and H(s1, s2) for the family, and a checker
for the conditions at the origin that secure eighth order."""
from __future__ import annotations

from dataclasses import dataclass, field

import mpmath
from mpmath import mpf

from ..errors import WeightSingular
from .config import G_KINDS, H_KINDS, MethodConfig

SECOND_PARTIAL_BOUND = mpf(10) ** 10


def eval_weight_G(kind: str, omega, t1, t2) -> mpf:
    if kind == "G1":
        s = t1 + t2
        den = 1 - s + omega * s**2
        if den == 0:
            raise WeightSingular("G1 denominator vanishes")
        return 1 / den
    if kind == "G2":
        return 1 + t1 + t2 + t1**2 + mpf("1.9") * t2**2 + mpf("4.4") * t1 * t2
    raise ValueError(f"unknown G weight {kind!r}")


def eval_weight_H(kind: str, s1, s2) -> mpf:
    if kind == "H1":
        return mpf(1)
    if kind == "H2":
        den = 1 + s1 * s2 + s1**2 + s2**2
        if den == 0:
            raise WeightSingular("H2 denominator vanishes")
        return 1 / den
    if kind == "H3":
        return 1 + s2**4 + s2**6
    if kind == "H4":
        return 1 + s1**2 + s2**2 + 2 * s1 * s2
    if kind == "H5":
        den = 1 - 20 * s1 * s2
        if den == 0:
            raise WeightSingular("H5 denominator vanishes")
        return 1 / den
    raise ValueError(f"unknown H weight {kind!r}")


@dataclass(frozen=True)
class Condition:
    name: str
    value: mpf
    target: int
    residual: mpf
    passed: bool


@dataclass(frozen=True)
class WeightReport:
    conditions: list[Condition]
    second_partials: dict[str, mpf] = field(default_factory=dict)
    bounded: bool = True

    @property
    def passed(self) -> bool:
        return self.bounded and all(c.passed for c in self.conditions)

    def describe(self) -> str:
        lines = [f"{c.name} = {mpmath.nstr(c.value, 8)} (target {c.target}, "
                 f"residual {mpmath.nstr(c.residual, 3)}) {'ok' if c.passed else 'FAIL'}"
                 for c in self.conditions]
        lines += [f"{k} = {mpmath.nstr(v, 8)}" for k, v in self.second_partials.items()]
        return "\n".join(lines)


def _probe(fn, name: str, arg_names: tuple[str, str], targets, digits: int):
    h = mpf(10) ** (-(digits // 3))
    tol = mpf(10) ** (-(digits // 4))
    u, v = arg_names
    f00 = fn(0, 0)
    d_u = (fn(h, 0) - fn(-h, 0)) / (2 * h)
    d_v = (fn(0, h) - fn(0, -h)) / (2 * h)
    conds = []
    for label, val, tgt in ((f"{name}(0,0)", f00, targets[0]),
                            (f"d{name}/d{u}(0,0)", d_u, targets[1]),
                            (f"d{name}/d{v}(0,0)", d_v, targets[2])):
        res = abs(val - tgt)
        conds.append(Condition(label, val, tgt, res, res <= tol))
    second = {
        f"d2{name}/d{u}2": (fn(h, 0) - 2 * f00 + fn(-h, 0)) / h**2,
        f"d2{name}/d{v}2": (fn(0, h) - 2 * f00 + fn(0, -h)) / h**2,
        f"d2{name}/d{u}d{v}": (fn(h, h) - fn(h, -h) - fn(-h, h) + fn(-h, -h)) / (4 * h**2),
    }
    bounded = all(mpmath.isfinite(x) and abs(x) <= SECOND_PARTIAL_BOUND for x in second.values())
    return conds, second, bounded


def check_weight_conditions(selector, omega="0", digits: int = 300) -> WeightReport:
    """Finite-difference check of the weight conditions at the origin.

    ``selector`` is a weight name ("G1", "G2", "H1".."H5") or a family
    :class:`MethodConfig`, in which case both of its weights are checked
    (six conditions). Required: G = 1 with unit first partials, and H = 1
    with vanishing first partials, plus bounded second partials.
    """
    if isinstance(selector, MethodConfig):
        g_rep = check_weight_conditions(selector.g_kind, selector.omega, digits)
        h_rep = check_weight_conditions(selector.h_kind, digits=digits)
        return WeightReport(g_rep.conditions + h_rep.conditions,
                            {**g_rep.second_partials, **h_rep.second_partials},
                            g_rep.bounded and h_rep.bounded)
    with mpmath.workdps(digits):
        if selector in G_KINDS:
            om = mpf(omega)
            conds, second, bounded = _probe(lambda a, b: eval_weight_G(selector, om, mpf(a), mpf(b)),
                                             "G", ("t1", "t2"), (1, 1, 1), digits)
        elif selector in H_KINDS:
            conds, second, bounded = _probe(lambda a, b: eval_weight_H(selector, mpf(a), mpf(b)),
                                             "H", ("s1", "s2"), (1, 0, 0), digits)
        else:
            raise ValueError(f"unknown weight {selector!r}")
    return WeightReport(conds, second, bounded)
