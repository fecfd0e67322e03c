"""
Serialization of every CLI payload as json, csv or text.

Renderers return strings; nothing here writes timestamps or run-dependent data,
so output is byte-identical for a fixed input.
"""
import csv
import io
import json
import os
import sys
from pathlib import Path
from typing import Any, Iterable, List, Optional, Sequence, TextIO

import click
from colorama import Fore, Style
from pydantic import BaseModel

try:
    from schemas.fusion_models import (
        CountReport,
        GradedDecomposition,
        PairVerification,
        SchurReport,
        SweepSummary,
        TensorDecomposition,
    )
except ImportError:
    sys.path.append(str(Path(__file__).resolve().parents[2]))
    from schemas.fusion_models import (
        CountReport,
        GradedDecomposition,
        PairVerification,
        SchurReport,
        SweepSummary,
        TensorDecomposition,
    )

try:
    from .graded_fusion import QPolynomial
except ImportError:
    from graded_fusion import QPolynomial

DECOMPOSITION_COLUMNS = ["type", "lambda1", "lambda2", "mu1", "mu2", "nu1", "nu2", "degree", "multiplicity"]
ORACLE_COLUMNS = ["type", "lambda1", "lambda2", "mu1", "mu2", "nu1", "nu2", "multiplicity"]
COUNT_COLUMNS = [
    "type", "lambda1", "lambda2", "mu1", "mu2",
    "s_count", "t_count", "klimyk_total", "dim_product", "tableau_count", "textbook_index_disagreements",
]
VERIFY_COLUMNS = ["type", "lambda1", "lambda2", "mu1", "mu2", "passed", "observations_flagged", "first_failure"]
SCHUR_COLUMNS = [
    "type",
    "lambda1_1", "lambda1_2", "lambda2_1", "lambda2_2",
    "mu1_1", "mu1_2", "mu2_1", "mu2_2",
    "nu1", "nu2", "left", "right",
]


def use_color(stream: TextIO = sys.stdout) -> bool:
    """Colour only on a terminal and only when NO_COLOR is unset."""
    if "NO_COLOR" in os.environ:
        return False
    isatty = getattr(stream, "isatty", None)
    return bool(isatty and isatty())


def _paint(text: str, ok: bool, color: bool) -> str:
    if not color:
        return text
    return f"{Fore.GREEN if ok else Fore.RED}{text}{Style.RESET_ALL}"


def _json(payload: Any) -> str:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json", by_alias=True)
    return json.dumps(payload, indent=2) + "\n"


def _csv(columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buffer.getvalue()


def _pair(w: Sequence[int]) -> str:
    return f"({w[0]}, {w[1]})"


def _header(lie_type: str, lam: Sequence[int], mu: Sequence[int]) -> str:
    return f"{lie_type}: V{_pair(lam)} x V{_pair(mu)}"


# --- decompose ---

def render_decomposition(d: GradedDecomposition, fmt: str) -> str:
    if fmt == "json":
        return _json(d)
    if fmt == "csv":
        rows = [
            [d.lie_type, *d.lam, *d.mu, *e.nu, r, c]
            for e in d.entries
            for r, c in enumerate(e.poly)
            if c
        ]
        return _csv(DECOMPOSITION_COLUMNS, rows)
    lines = [_header(d.lie_type, d.lam, d.mu), f"  {'nu':<10} graded multiplicity"]
    lines += [f"  {_pair(e.nu):<10} {QPolynomial(tuple(e.poly))}" for e in d.entries]
    return "\n".join(lines) + "\n"


# --- oracle ---

def render_oracle(d: TensorDecomposition, t_count: int, fmt: str) -> str:
    if fmt == "json":
        return _json({**d.model_dump(mode="json", by_alias=True), "t_count": t_count})
    if fmt == "csv":
        return _csv(ORACLE_COLUMNS, [[d.lie_type, *d.lam, *d.mu, *e.nu, e.multiplicity] for e in d.entries])
    lines = [_header(d.lie_type, d.lam, d.mu), f"  {'nu':<10} multiplicity"]
    lines += [f"  {_pair(e.nu):<10} {e.multiplicity}" for e in d.entries]
    lines.append(f"  total {sum(e.multiplicity for e in d.entries)}, |T^{d.lie_type[0]}| = {t_count}")
    return "\n".join(lines) + "\n"


# --- count ---

def render_count(report: CountReport, fmt: str) -> str:
    data = report.model_dump(mode="json", by_alias=True)
    if fmt == "json":
        return _json(data)
    if fmt == "csv":
        g2 = [
            "" if value is None else value for value in (report.tableau_count, report.textbook_index_disagreements)
        ]
        row = [report.lie_type, *report.lam, *report.mu, report.s_count, report.t_count, report.klimyk_total, report.dim_product, *g2]
        return _csv(COUNT_COLUMNS, [row])
    lines = [_header(report.lie_type, report.lam, report.mu)]
    lines.append(f"  |S|            {report.s_count}")
    lines.append(f"  |T|            {report.t_count}")
    lines.append(f"  Klimyk total   {report.klimyk_total}")
    lines.append(f"  dim product    {report.dim_product}")
    if report.tableau_count is not None:
        lines.append(f"  tableaux       {report.tableau_count}")
    if report.textbook_index_disagreements:
        lines.append(f"  index disagreements {report.textbook_index_disagreements}")
    return "\n".join(lines) + "\n"


# --- verify ---

def summary_line(summary: SweepSummary, noun: str = "pair") -> str:
    plural = noun if summary.pairs == 1 else f"{noun}s"
    if summary.passed:
        return f"{summary.pairs} {plural}, all checks pass"
    return f"{summary.pairs} {plural}, {summary.failures} failed; first failure: {summary.first_failure}"


def render_verify(summary: SweepSummary, results: List[PairVerification], fmt: str, color: bool = False) -> str:
    if fmt == "json":
        failed = [r.model_dump(mode="json", by_alias=True) for r in results if not r.passed]
        return _json({"summary": summary.model_dump(mode="json", by_alias=True), "failures": failed})
    if fmt == "csv":
        rows = [
            [
                r.lie_type,
                *r.lam,
                *r.mu,
                r.passed,
                sum(1 for report in r.reports for c in report.observations if not c.passed),
                r.first_failure() or "",
            ]
            for r in results
        ]
        return _csv(VERIFY_COLUMNS, rows)
    lines = [_paint(summary_line(summary), summary.passed, color)]
    if summary.observations_flagged:
        lines.append(f"{summary.observations_flagged} non-gating observations flagged")
    return "\n".join(lines) + "\n"


# --- schur ---

def _schur_text(report: SchurReport, color: bool) -> List[str]:
    lines = [
        f"{report.lie_type}: V{_pair(report.lambda1)} x V{_pair(report.lambda2)} "
        f"vs V{_pair(report.mu1)} x V{_pair(report.mu2)}",
        f"  {'nu':<10} {'left':>5} {'right':>5}",
    ]
    for row in report.rows:
        mark = "" if row.left <= row.right else "  <-- exceeds"
        lines.append(f"  {_pair(row.nu):<10} {row.left:>5} {row.right:>5}{mark}")
    lines.append("  verdict: " + _paint(str(report.verdict).lower(), report.verdict, color))
    if report.graded_dominates is not None:
        lines.append(f"  graded domination: {str(report.graded_dominates).lower()}")
    return lines


def _schur_rows(report: SchurReport) -> List[List[Any]]:
    quad = [*report.lambda1, *report.lambda2, *report.mu1, *report.mu2]
    return [[report.lie_type, *quad, *row.nu, row.left, row.right] for row in report.rows]


def render_schur(
    reports: List[SchurReport],
    fmt: str,
    summary: Optional[SweepSummary] = None,
    color: bool = False,
) -> str:
    """A single report when ``summary`` is None, otherwise a sweep."""
    if fmt == "json":
        if summary is None:
            return _json(reports[0])
        return _json(
            {
                "summary": summary.model_dump(mode="json", by_alias=True),
                "reports": [r.model_dump(mode="json", by_alias=True) for r in reports],
            }
        )
    if fmt == "csv":
        return _csv(SCHUR_COLUMNS, [row for r in reports for row in _schur_rows(r)])
    if summary is None:
        return "\n".join(_schur_text(reports[0], color)) + "\n"
    lines = [_paint(summary_line(summary, noun="quadruple"), summary.passed, color)]
    for r in reports:
        if not r.verdict:
            lines += _schur_text(r, color)
    if summary.observations_flagged:
        lines.append(f"{summary.observations_flagged} quadruples without graded domination")
    return "\n".join(lines) + "\n"


def emit(text: str, out: Optional[Path] = None) -> None:
    """Writes a payload to ``out`` or standard output."""
    if out is None:
        click.echo(text, nl=False)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8", newline="") as f:
        f.write(text)
