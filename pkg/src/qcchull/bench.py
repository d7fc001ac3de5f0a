"""Scaling experiments: run algorithms over instance grids, record
query-cost ledgers, fit log-log exponents, and emit CSV/SVG artifacts.
"""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass, fields, replace
from statistics import linear_regression
from typing import Sequence

from .hull import (
    classical_upper_hull,
    monotone_chain_upper,
    monotone_full_hull,
    quantum_jarvis_full,
    quantum_upper_hull,
)
from .instances import GenSpec, generate
from .maxima import classical_maxima, quantum_maxima, scan_maxima
from .oracle import SortedPointSet
from .qsim import ANALYTIC, CostLedger, SimMode

ALGOS = (
    "qcc",
    "classical-dc",
    "monotone",
    "jarvis-q",
    "maxima-qcc",
    "maxima-classical",
)

#: Sensible cost metric to fit per algorithm (quantum algorithms are
#: judged on charged units, classical ones on oracle reads).
DEFAULT_METRIC = {
    "qcc": "total_units",
    "jarvis-q": "sqrt_units",
    "maxima-qcc": "total_units",
    "classical-dc": "classical_queries",
    "monotone": "classical_queries",
    "maxima-classical": "classical_queries",
}


class DegenerateFit(ValueError):
    """Not enough spread in the data to fit an exponent."""


@dataclass(frozen=True)
class RunRecord:
    kind: str
    n: int
    h_true: int
    h_final_guess: int
    algo: str
    sqrt_units: int
    polylog_units: int
    mc_units: int
    classical_queries: int
    qmax_calls: int
    qlp_calls: int
    wall_time_ms: int
    correct: bool

    @property
    def total_units(self) -> int:
        return self.sqrt_units + self.polylog_units


CSV_FIELDS = tuple(f.name for f in fields(RunRecord))


def _run_one(spec: GenSpec, o: SortedPointSet, algo: str, mode: SimMode) -> RunRecord:
    t0 = time.perf_counter()
    ledger = CostLedger()
    if algo == "qcc":
        result, ledger = quantum_upper_hull(o, mode)
        got = list(result.points)
    elif algo == "classical-dc":
        got = list(classical_upper_hull(o).points)
    elif algo == "monotone":
        got = list(monotone_chain_upper([o.query(i) for i in range(o.n)]).points)
    elif algo == "jarvis-q":
        got, ledger = quantum_jarvis_full(o, mode)
    elif algo == "maxima-qcc":
        result, ledger = quantum_maxima(o, mode)
        got = list(result.points)
    elif algo == "maxima-classical":
        got = list(classical_maxima(o).points)
    else:
        raise ValueError(f"unknown algorithm {algo!r}")
    elapsed_ms = int(round((time.perf_counter() - t0) * 1000))
    queries = o.classical_query_count

    contents = o.contents()
    if algo in ("maxima-qcc", "maxima-classical"):
        want = list(scan_maxima(contents).points)
    elif algo == "jarvis-q":
        want = monotone_full_hull(contents)
    else:
        want = list(monotone_chain_upper(contents).points)
    h_true = len(want)
    h_final = ledger.passes[-1]["guess"] if ledger.passes else 0
    return RunRecord(
        kind=spec.kind,
        n=o.n,
        h_true=h_true,
        h_final_guess=h_final,
        algo=algo,
        sqrt_units=ledger.sqrt_units,
        polylog_units=ledger.polylog_units,
        mc_units=ledger.mc_units,
        classical_queries=queries,
        qmax_calls=ledger.qmax_calls,
        qlp_calls=ledger.qlp_calls,
        wall_time_ms=elapsed_ms,
        correct=got == want,
    )


def run_experiment(
    grid: Sequence[GenSpec],
    algos: Sequence[str],
    reps: int = 1,
    mode: SimMode = ANALYTIC,
) -> list[RunRecord]:
    """One record per (instance, algorithm, repetition), in grid order.

    Repetition r of a spec uses seed ``spec.seed + r`` so repeated runs
    see fresh (but reproducible) instances.  Every run gets its own
    freshly generated oracle, so query counters never bleed across runs.
    """
    if not grid:
        raise ValueError("empty instance grid")
    if not algos:
        raise ValueError("no algorithms given")
    for algo in algos:
        if algo not in ALGOS:
            raise ValueError(f"unknown algorithm {algo!r}")
    records = []
    for spec in grid:
        for rep in range(reps):
            rspec = replace(spec, seed=spec.seed + rep)
            for algo in algos:
                records.append(_run_one(rspec, generate(rspec), algo, mode))
    return records


def fit_exponent(records: Sequence[RunRecord], x_field: str, y_field: str) -> float:
    """Least-squares slope of log2(y) against log2(x)."""
    xs = [getattr(r, x_field) for r in records]
    ys = [getattr(r, y_field) for r in records]
    if len(set(xs)) < 3:
        raise DegenerateFit(f"need >= 3 distinct {x_field} values, got {len(set(xs))}")
    if any(x <= 0 for x in xs) or any(y <= 0 for y in ys):
        raise DegenerateFit("log-log fit needs strictly positive values")
    slope, _ = linear_regression([math.log2(x) for x in xs], [math.log2(y) for y in ys])
    return slope


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def emit_csv(records: Sequence[RunRecord], path: str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_FIELDS)
        for r in records:
            w.writerow([_cell(getattr(r, name)) for name in CSV_FIELDS])


def read_csv_records(path: str) -> list[RunRecord]:
    """Exact inverse of emit_csv."""
    types = {f.name: f.type for f in fields(RunRecord)}
    out = []
    with open(path, newline="", encoding="utf-8") as fh:
        rd = csv.reader(fh)
        header = next(rd)
        if tuple(header) != CSV_FIELDS:
            raise ValueError(f"unexpected CSV header {header!r}")
        for row in rd:
            kw = {}
            for name, cell in zip(CSV_FIELDS, row):
                t = types[name]
                if t == "bool":
                    kw[name] = cell == "true"
                elif t == "int":
                    kw[name] = int(cell)
                else:
                    kw[name] = cell
            out.append(RunRecord(**kw))
    return out


def emit_svg_scatter(
    records: Sequence[RunRecord], x_field: str, y_field: str, path: str
) -> None:
    """Log-log scatter of y_field against x_field with the fitted line
    and its slope annotated.  Fit decorations are skipped when the data
    cannot support a fit."""
    width, height, margin = 640, 440, 50
    pts = [
        (math.log2(getattr(r, x_field)), math.log2(getattr(r, y_field)))
        for r in records
        if getattr(r, x_field) > 0 and getattr(r, y_field) > 0
    ]
    if not pts:
        raise DegenerateFit("nothing to plot")
    x_lo = min(p[0] for p in pts)
    x_hi = max(p[0] for p in pts)
    y_lo = min(p[1] for p in pts)
    y_hi = max(p[1] for p in pts)
    x_span = (x_hi - x_lo) or 1.0
    y_span = (y_hi - y_lo) or 1.0

    def to_px(x: float, y: float) -> tuple[float, float]:
        px = margin + (x - x_lo) / x_span * (width - 2 * margin)
        py = height - margin - (y - y_lo) / y_span * (height - 2 * margin)
        return px, py

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<text x="{width // 2}" y="{height - 12}" text-anchor="middle" '
        f'font-size="13">log2 {x_field}</text>',
        f'<text x="14" y="{height // 2}" font-size="13" '
        f'transform="rotate(-90 14 {height // 2})" text-anchor="middle">'
        f"log2 {y_field}</text>",
    ]
    for x, y in pts:
        px, py = to_px(x, y)
        parts.append(f'<circle cx="{px:.1f}" cy="{py:.1f}" r="3" fill="steelblue"/>')
    try:
        slope = fit_exponent(records, x_field, y_field)
        _, intercept = linear_regression(
            [p[0] for p in pts], [p[1] for p in pts]
        )
        x0, x1 = x_lo, x_hi
        p0 = to_px(x0, slope * x0 + intercept)
        p1 = to_px(x1, slope * x1 + intercept)
        parts.append(
            f'<line x1="{p0[0]:.1f}" y1="{p0[1]:.1f}" x2="{p1[0]:.1f}" '
            f'y2="{p1[1]:.1f}" stroke="crimson" stroke-width="1.5"/>'
        )
        parts.append(
            f'<text x="{width - margin}" y="{margin - 16}" text-anchor="end" '
            f'font-size="13">slope={slope:.3f}</text>'
        )
    except DegenerateFit:
        parts.append(
            f'<text x="{width - margin}" y="{margin - 16}" text-anchor="end" '
            f'font-size="13">slope=n/a</text>'
        )
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")
