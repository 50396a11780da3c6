from __future__ import annotations

import dataclasses
import enum
from dataclasses import dataclass
from typing import Optional

from mpmath import mpf

from ..errors import UnknownMethod


class Scheme(str, enum.Enum):
    NEWTON = "Newton"
    STEFFENSEN = "Steffensen"
    FAMILY = "Family"
    KUNG_TRAUB = "KungTraub"
    THUKRAL_M1 = "ThukralM1"
    THUKRAL_M2 = "ThukralM2"
    THUKRAL_M3 = "ThukralM3"
    PETKOVIC_1 = "Petkovic1"
    PETKOVIC_2 = "Petkovic2"


class Status(str, enum.Enum):
    ADVANCED = "Advanced"
    CONVERGED_EXACTLY = "ConvergedExactly"
    DEGENERATE = "Degenerate"


# evaluations per full step; Newton counts the derivative call
NOMINAL_COST = {
    Scheme.NEWTON: 2,
    Scheme.STEFFENSEN: 2,
    Scheme.FAMILY: 4,
    Scheme.KUNG_TRAUB: 4,
    Scheme.THUKRAL_M1: 4,
    Scheme.THUKRAL_M2: 4,
    Scheme.THUKRAL_M3: 4,
    Scheme.PETKOVIC_1: 4,
    Scheme.PETKOVIC_2: 4,
}

G_KINDS = ("G1", "G2")
H_KINDS = ("H1", "H2", "H3", "H4", "H5")

DEFAULT_KAPPA = "0.01"
# Reproduces the tabulated comparator columns; see README.
DEFAULT_BETA = "1"


@dataclass(frozen=True)
class MethodConfig:
    """Scheme selector plus its free parameters.

    Parameters are kept as decimal strings so a config is independent of the
    working precision; they are converted with :meth:`param` when a step runs.
    ``g_kind``, ``h_kind`` and ``omega`` only matter for the family.
    """

    scheme: Scheme
    kappa: str = DEFAULT_KAPPA
    beta: str = DEFAULT_BETA
    omega: str = "0"
    g_kind: str = "G1"
    h_kind: str = "H1"
    name: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "scheme", Scheme(self.scheme))
        for field in ("kappa", "beta", "omega"):
            object.__setattr__(self, field, str(getattr(self, field)))
        if self.g_kind not in G_KINDS:
            raise ValueError(f"g_kind must be one of {G_KINDS}, got {self.g_kind!r}")
        if self.h_kind not in H_KINDS:
            raise ValueError(f"h_kind must be one of {H_KINDS}, got {self.h_kind!r}")
        if mpf(self.kappa) == 0:
            raise ValueError("kappa must be nonzero")
        if mpf(self.beta) <= 0:
            raise ValueError("beta must be positive")

    def param(self, field: str) -> mpf:
        return mpf(getattr(self, field))

    @property
    def cost(self) -> int:
        return NOMINAL_COST[self.scheme]

    @property
    def label(self) -> str:
        return self.name or self.scheme.value

    def replace(self, **changes) -> "MethodConfig":
        return dataclasses.replace(self, **changes)


@dataclass(frozen=True)
class StepResult:
    next_x: mpf
    evals_used: int
    status: Status = Status.ADVANCED


_NAMED_FAMILY = {
    "L1": ("G1", "H1", "0.01"),
    "L2": ("G1", "H1", "-0.022"),
    "L3": ("G1", "H1", "-0.001"),
    "L4": ("G2", "H1", "0.01"),
    "L5": ("G1", "H3", "-0.01"),
    "L6": ("G1", "H2", "0.01"),
    "L7": ("G1", "H4", "0.01"),
    "L8": ("G1", "H5", "0.01"),
}

_NAMED_OTHER = {
    "KT": Scheme.KUNG_TRAUB,
    "M1": Scheme.THUKRAL_M1,
    "M2": Scheme.THUKRAL_M2,
    "M3": Scheme.THUKRAL_M3,
    "P1": Scheme.PETKOVIC_1,
    "P2": Scheme.PETKOVIC_2,
    "Steffensen": Scheme.STEFFENSEN,
    "Newton": Scheme.NEWTON,
}

FAMILY_NAMES = tuple(_NAMED_FAMILY)
COMPARATOR_NAMES = ("KT", "M1", "M2", "M3", "P1", "P2")
METHOD_NAMES = FAMILY_NAMES + tuple(_NAMED_OTHER)


def make_named_config(name: str) -> MethodConfig:
    """One of the eight named family members L1..L8 (kappa = 0.01)."""
    try:
        g, h, omega = _NAMED_FAMILY[name]
    except KeyError:
        raise UnknownMethod(f"unknown family member {name!r}; expected one of {', '.join(FAMILY_NAMES)}") from None
    return MethodConfig(Scheme.FAMILY, kappa="0.01", omega=omega, g_kind=g, h_kind=h, name=name)


def method_config(name: str, **overrides) -> MethodConfig:
    """Config for any stable method identifier, with optional parameter overrides."""
    if name in _NAMED_FAMILY:
        cfg = make_named_config(name)
    elif name in _NAMED_OTHER:
        cfg = MethodConfig(_NAMED_OTHER[name], name=name)
    else:
        raise UnknownMethod(f"unknown method {name!r}; expected one of {', '.join(METHOD_NAMES)}")
    overrides = {k: v for k, v in overrides.items() if v is not None}
    return cfg.replace(**overrides) if overrides else cfg
