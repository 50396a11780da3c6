"""Sweep (method x problem) cells under a fixed evaluation budget."""
from __future__ import annotations

import dataclasses
import datetime as _dt
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from mpmath import mpf

from ..analysis import TraceStatus, coc, run_budgeted
from ..corpus import PROBLEM_IDS, get_problem
from ..errors import InsufficientTrace, InvalidSpec, ZeroError
from ..numerics import DEFAULT_DIGITS, MIN_DIGITS, PrecisionContext
from ..schemes import COMPARATOR_NAMES, METHOD_NAMES, method_config
from .golden import table1_rows

LAYOUTS = ("grid", "table1")
SPEC_KEYS = {"methods", "problems", "budget", "digits", "kappa", "beta", "omega", "layout", "jobs"}


@dataclass
class RunSpec:
    methods: list[str] = field(default_factory=list)
    problems: list[str] = field(default_factory=lambda: ["all"])
    budget: int = 12
    digits: int = DEFAULT_DIGITS
    kappa: Optional[str] = None
    beta: Optional[str] = None
    omega: Optional[str] = None
    layout: str = "grid"
    jobs: int = 1

    def validate(self) -> "RunSpec":
        """Normalised copy; bad specs are rejected before any computation."""
        return dataclasses.replace(self)._normalise()

    def _normalise(self) -> "RunSpec":
        if self.layout not in LAYOUTS:
            raise InvalidSpec(f"layout must be one of {LAYOUTS}, got {self.layout!r}")
        probs = list(PROBLEM_IDS) if self.problems in (["all"], "all") else list(self.problems)
        if not probs:
            raise InvalidSpec("no problems requested")
        for pid in probs:
            if pid not in PROBLEM_IDS:
                raise InvalidSpec(f"unknown problem {pid!r}")
        if self.layout == "grid":
            if not self.methods:
                raise InvalidSpec("no methods requested")
            meths = list(METHOD_NAMES) if self.methods in (["all"], "all") else list(self.methods)
            for m in meths:
                if m not in METHOD_NAMES:
                    raise InvalidSpec(f"unknown method {m!r}")
        else:
            meths = list(self.methods) if self.methods and self.methods != ["all"] else list(COMPARATOR_NAMES)
        for name in ("kappa", "beta", "omega"):
            val = getattr(self, name)
            if val is not None:
                try:
                    mpf(str(val))
                except (ValueError, TypeError):
                    raise InvalidSpec(f"{name} is not a number: {val!r}") from None
                setattr(self, name, str(val))
        if not isinstance(self.digits, int) or self.digits < MIN_DIGITS:
            raise InvalidSpec(f"digits must be an integer >= {MIN_DIGITS}")
        if not isinstance(self.budget, int) or self.budget < 1:
            raise InvalidSpec("budget must be a positive integer")
        try:
            costs = [self._config(m).cost for m in meths + (["L1"] if self.layout == "table1" else [])]
        except ValueError as exc:
            raise InvalidSpec(str(exc)) from None
        if self.budget < max(costs):
            raise InvalidSpec(f"budget {self.budget} is below one step ({max(costs)} evaluations)")
        self.methods, self.problems = meths, probs
        return self

    def _config(self, name):
        return method_config(name, kappa=self.kappa, beta=self.beta, omega=self.omega)

    def cell_keys(self) -> list[tuple[str, str]]:
        if self.layout == "table1":
            family = {r["problem"]: r["method"] for r in table1_rows()}
            return [(m, pid) for pid in self.problems for m in [family[pid], *self.methods]]
        return [(m, pid) for pid in self.problems for m in self.methods]

    @classmethod
    def from_mapping(cls, data: dict) -> "RunSpec":
        unknown = set(data) - SPEC_KEYS
        if unknown:
            raise InvalidSpec(f"unknown config keys: {sorted(unknown)}")
        data = dict(data)
        for key in ("methods", "problems"):
            if isinstance(data.get(key), str):
                data[key] = [data[key]]
        return cls(**data)

    @classmethod
    def from_file(cls, path) -> "RunSpec":
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidSpec(f"cannot read config {path}: {exc}") from None
        if not isinstance(data, dict):
            raise InvalidSpec("config must be a JSON object")
        return cls.from_mapping(data)


@dataclass
class Cell:
    method: str
    problem: str
    final_error: mpf
    coc: Optional[mpf]
    status: str
    iterations: int
    evals: int


@dataclass
class BenchmarkReport:
    cells: dict[tuple[str, str], Cell]
    meta: dict

    def cell(self, method, problem) -> Cell:
        return self.cells[(method, problem)]

    @property
    def any_degenerate(self) -> bool:
        return any(c.status == TraceStatus.DEGENERATE.value for c in self.cells.values())


def run_cell(spec: RunSpec, method: str, pid: str) -> Cell:
    ctx = PrecisionContext(spec.digits)
    cfg = spec._config(method)
    p = get_problem(pid)
    trace = run_budgeted(cfg, p, spec.budget, ctx)
    try:
        order = coc(trace)
    except (InsufficientTrace, ZeroError):
        order = None
    return Cell(method, pid, trace.final_error, order, trace.status.value,
                trace.iterations, trace.total_evals)


def _run_cell_args(args):
    return run_cell(*args)


def run_benchmark(spec: RunSpec) -> BenchmarkReport:
    """Evaluate every requested cell. Output order follows the spec, never completion order."""
    spec = spec.validate()
    keys = spec.cell_keys()
    ctx = PrecisionContext(spec.digits)
    for pid in spec.problems:
        # warm the refined-root cache once per problem
        get_problem(pid).with_refined_root(ctx)
    jobs = [(spec, m, pid) for m, pid in keys]
    if spec.jobs > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            cells = list(pool.map(_run_cell_args, jobs))
    else:
        cells = [run_cell(*j) for j in jobs]
    meta = {
        "digits": spec.digits,
        "budget": spec.budget,
        "layout": spec.layout,
        "methods": spec.methods,
        "problems": spec.problems,
        "kappa": spec.kappa,
        "beta": spec.beta,
        "omega": spec.omega,
        "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
    }
    return BenchmarkReport({(c.method, c.problem): c for c in cells}, meta)

