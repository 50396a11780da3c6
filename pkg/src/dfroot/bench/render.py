"""Text renderings of a benchmark report."""
from __future__ import annotations

import csv
import io
import json

import mpmath
from mpmath import mpf

from ..corpus import get_problem
from ..numerics import PrecisionContext, serialize_real
from ..schemes import FAMILY_NAMES

FORMATS = ("md", "markdown", "csv", "json")
CSV_HEADER = ["method", "problem", "error", "coc", "status"]
_COLUMN_TITLES = {"KT": "K-T"}


def format_error(x) -> str:
    """Three significant digits with a signed exponent, e.g. ``6.38e-247``."""
    x = mpf(x)
    if x == 0:
        return "0"
    with mpmath.workdps(30):
        sign = "-" if x < 0 else ""
        x = abs(x)
        e = int(mpmath.floor(mpmath.log10(x)))
        mant = mpmath.nint(x / mpf(10) ** e * 100)
        if mant >= 1000:
            mant = mpmath.nint(mant / 10)
            e += 1
        elif mant < 100:
            mant *= 10
            e -= 1
        m = int(mant)
    return f"{sign}{m // 100}.{m % 100:02d}e{e:+d}"


def format_coc(c) -> str:
    """Four decimals, truncated toward zero (how the printed table reads)."""
    if c is None:
        return ""
    with mpmath.workdps(30):
        c = mpf(c)
        q = int(mpmath.floor(abs(c) * 10000))
    sign = "-" if c < 0 and q else ""
    return f"{sign}{q // 10000}.{q % 10000:04d}"


def render_report(report, fmt: str) -> str:
    if fmt in ("md", "markdown"):
        return _markdown(report)
    if fmt == "csv":
        return _csv(report)
    if fmt == "json":
        return _json(report)
    raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")


def _csv(report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for c in report.cells.values():
        w.writerow([c.method, c.problem, format_error(c.final_error), format_coc(c.coc), c.status])
    return buf.getvalue()


def parse_csv(text: str) -> list[dict]:
    """Inverse of the csv rendering, to printed precision."""
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != CSV_HEADER:
        raise ValueError(f"unexpected csv header {reader.fieldnames}")
    rows = []
    for r in reader:
        rows.append({
            "method": r["method"],
            "problem": r["problem"],
            "error": mpf(r["error"]),
            "coc": mpf(r["coc"]) if r["coc"] else None,
            "status": r["status"],
        })
    return rows


def _json(report) -> str:
    ctx = PrecisionContext(report.meta["digits"])
    cells = [{
        "method": c.method,
        "problem": c.problem,
        "error": serialize_real(c.final_error, ctx),
        "error_display": format_error(c.final_error),
        "coc": None if c.coc is None else serialize_real(c.coc, ctx),
        "coc_display": format_coc(c.coc),
        "status": c.status,
        "iterations": c.iterations,
        "evals": c.evals,
    } for c in report.cells.values()]
    return json.dumps({"meta": report.meta, "cells": cells}, indent=2) + "\n"


def _columns(report):
    """(title, per-problem method lookup) pairs in first-seen order."""
    problems, methods = [], []
    for m, p in report.cells:
        if p not in problems:
            problems.append(p)
        if m not in methods:
            methods.append(m)
    if report.meta.get("layout") == "table1":
        fam = [m for m in methods if m in FAMILY_NAMES]
        rest = [m for m in methods if m not in FAMILY_NAMES]
        cols = [("L", {p: m for m, p in report.cells if m in fam})]
        cols += [(_COLUMN_TITLES.get(m, m), {p: m for p in problems}) for m in rest]
    else:
        cols = [(_COLUMN_TITLES.get(m, m), {p: m for p in problems}) for m in methods]
    return problems, cols


def _markdown(report) -> str:
    problems, cols = _columns(report)
    merged = report.meta.get("layout") == "table1"
    head = "| (f, x0) | " + " | ".join(t for t, _ in cols) + " |"
    rule = "|" + "---|" * (len(cols) + 1)

    def cell_text(p, title, lookup, value):
        m = lookup.get(p)
        if m is None or (m, p) not in report.cells:
            return ""
        c = report.cells[(m, p)]
        txt = value(c)
        if c.status == "Degenerate":
            txt = f"{txt} (degenerate)" if txt else "degenerate"
        return f"({m}) {txt}" if merged and title == "L" else txt

    lines = [f"Absolute error |x_n - alpha| after {report.meta['budget']} evaluations "
             f"at {report.meta['digits']} digits", "", head, rule]
    for p in problems:
        row = []
        for t, lookup in cols:
            row.append(cell_text(p, t, lookup, lambda c: format_error(c.final_error)))
        lines.append(f"| {p}, {get_problem(p).x0} | " + " | ".join(row) + " |")
    lines += ["", "Computational order of convergence", "", head, rule]
    for p in problems:
        row = []
        for t, lookup in cols:
            row.append(cell_text(p, t, lookup, lambda c: format_coc(c.coc) or "-"))
        lines.append(f"| {p} | " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"
