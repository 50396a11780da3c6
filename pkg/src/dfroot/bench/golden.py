"""Published reference errors and COCs for the benchmark table, with comparison helpers."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Optional

import mpmath
from mpmath import mpf

_SCI = re.compile(r"(?P<mant>[+-]?\d+(?:\.\d+)?)e(?P<sign>[+-]?)(?P<exp>\d+)")


@lru_cache(maxsize=None)
def load_table1() -> dict:
    return json.loads(resources.files("dfroot").joinpath("data/table1.json").read_text())


def table1_rows() -> list[dict]:
    return load_table1()["rows"]


def golden_error(text: str) -> mpf:
    """Magnitude of a printed error.

    Two cells print a positive exponent ("4.91e244", "5.65e256"), impossible
    for a converging run; an unsigned exponent is read as negative.
    """
    m = _SCI.fullmatch(text.strip())
    if not m:
        raise ValueError(f"not a tabulated error: {text!r}")
    exp = int(m["exp"])
    if m["sign"] != "+":
        exp = -exp
    with mpmath.workdps(30):
        return mpf(m["mant"]) * mpf(10) ** exp


def decimal_exponent(x) -> int:
    """``floor(log10|x|)``; for ``6.38e-247`` this is ``-247``."""
    x = abs(mpf(x))
    if x == 0:
        raise ValueError("zero has no decimal exponent")
    with mpmath.workdps(30):
        e = int(mpmath.floor(mpmath.log10(x)))
        # guard log10 rounding at exact powers of ten
        if x < mpf(10) ** e:
            e -= 1
        elif x >= mpf(10) ** (e + 1):
            e += 1
    return e


def golden_cell(method: str, problem: str) -> Optional[dict]:
    """Printed ``{"error", "coc"}`` for a cell, or None if the reference table lacks it."""
    for row in table1_rows():
        if row["problem"] != problem:
            continue
        if method == row["method"]:
            return {"error": row["error"], "coc": row["coc"]}
        return row["comparators"].get(method)
    return None


@dataclass(frozen=True)
class GoldenCheck:
    method: str
    problem: str
    reference_error: str
    reference_coc: str
    our_error: mpf
    our_coc: Optional[mpf]

    @property
    def exponent_deviation(self) -> float:
        """Relative deviation of our decimal exponent from the printed one."""
        ours = decimal_exponent(self.our_error)
        theirs = decimal_exponent(golden_error(self.reference_error))
        return abs(ours - theirs) / abs(theirs)


def compare_report(report) -> list[GoldenCheck]:
    """Pair each report cell with its printed counterpart, where one exists."""
    out = []
    for (method, pid), cell in report.cells.items():
        gold = golden_cell(method, pid)
        if gold is None or cell.final_error == 0:
            continue
        out.append(GoldenCheck(method, pid, gold["error"], gold["coc"], cell.final_error, cell.coc))
    return out
