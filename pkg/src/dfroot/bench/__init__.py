"""Benchmark harness, report rendering and the command-line interface."""
from .golden import compare_report, golden_cell, golden_error, load_table1
from .harness import BenchmarkReport, Cell, RunSpec, run_benchmark, run_cell
from .render import format_coc, format_error, parse_csv, render_report

__all__ = [
    "BenchmarkReport", "Cell", "RunSpec", "compare_report", "format_coc", "format_error",
    "golden_cell", "golden_error", "load_table1", "parse_csv", "render_report",
    "run_benchmark", "run_cell",
]
