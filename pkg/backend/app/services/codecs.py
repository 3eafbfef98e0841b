"""Input parsing and output rendering for the command-line front end.

Polynomials come either inline, as ``"w,x,y,z;w,x,y,z;..."`` with index =
power and 1 to 4 components per entry, or as a JSON file holding
``{"coeffs": [[w, x, y, z], ...]}`` (a bare list of coefficients is accepted
too). JSON output goes through pydantic, which writes the shortest decimal
form that reads back to the same double.
"""
import json
import logging
import math
from functools import partial
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, Union

import click
import pandas as pd
from pydantic import BaseModel, ValidationError

from ..exceptions import PolynomialParseError
from ..models.polynomial import PolynomialDocument, QPolynomial
from ..models.quaternion import Quaternion
from ..models.reports import CheckReport, CounterexampleReport, NormReport, ProfileRow, SliceExtrema, SweepSummary

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("json", "csv", "text")


# ============================================================
# Parsing
# ============================================================

def _parse_components(entry: str, where: str) -> Quaternion:
    parts = [p.strip() for p in entry.split(",")]
    if not 1 <= len(parts) <= 4 or any(p == "" for p in parts):
        raise PolynomialParseError(f"{where}: expected 1 to 4 comma-separated numbers, got {entry!r}")
    try:
        values = [float(p) for p in parts]
    except ValueError as e:
        raise PolynomialParseError(f"{where}: {e}") from e
    if not all(math.isfinite(v) for v in values):
        raise PolynomialParseError(f"{where}: non-finite component in {entry!r}")
    return Quaternion.from_sequence(values)


def parse_quaternion(text: str) -> Quaternion:
    """'w,x,y,z' (missing trailing components are zero)"""
    return _parse_components(text.strip(), "quaternion")


def _looks_like_path(text: str) -> bool:
    return text.endswith(".json") or Path(text).is_file()


def _load_document(path: Path) -> QPolynomial:
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise PolynomialParseError(f"Cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise PolynomialParseError(f"{path} is not valid JSON: {e}") from e
    if isinstance(raw, list):
        raw = {"coeffs": raw}
    try:
        doc = PolynomialDocument.model_validate(raw)
    except ValidationError as e:
        raise PolynomialParseError(f"{path}: {e.errors()[0]['msg']}") from e
    if not doc.coeffs:
        raise PolynomialParseError(f"{path}: a polynomial needs at least one coefficient")
    return doc.to_polynomial()


def parse_polynomial(text: str) -> QPolynomial:
    """Inline coefficient string or path to a JSON document"""
    text = text.strip()
    if not text:
        raise PolynomialParseError("empty polynomial")
    if _looks_like_path(text):
        return _load_document(Path(text).expanduser())
    entries = text.split(";")
    coeffs = [_parse_components(e.strip(), f"coefficient {k}") for k, e in enumerate(entries)]
    return QPolynomial(tuple(coeffs))


# ============================================================
# Rendering
# ============================================================

def to_json(model: BaseModel) -> str:
    return model.model_dump_json(indent=2)


def polynomial_document(P: QPolynomial) -> PolynomialDocument:
    return PolynomialDocument.from_polynomial(P)


def format_number(value: float, digits: int) -> str:
    return f"{value:.{digits}g}"


def format_quaternion(q: Quaternion, digits: int) -> str:
    return ", ".join(format_number(c, digits) for c in q)


def _csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    # pandas writes floats in shortest repr form, so values re-parse bit-exactly
    frame = pd.DataFrame(list(rows), columns=list(header))
    return frame.to_csv(index=False, lineterminator="\n")


def polynomial_csv(P: QPolynomial) -> str:
    """k,w,x,y,z"""
    return _csv(("k", "w", "x", "y", "z"), ((k, *c.to_list()) for k, c in enumerate(P.coeffs)))


def profile_csv(rows: Sequence[ProfileRow]) -> str:
    """alpha,slice_max,slice_min"""
    return _csv(("alpha", "slice_max", "slice_min"), ((r.alpha, r.slice_max, r.slice_min) for r in rows))


def zonal_csv(rows: Iterable[Sequence[Any]]) -> str:
    """k,x0,x1,x2,x3,value"""
    return _csv(("k", "x0", "x1", "x2", "x3", "value"), rows)


def quaternion_csv(q: Quaternion) -> str:
    return _csv(("w", "x", "y", "z"), [q.to_list()])


def polynomial_text(P: QPolynomial, digits: int) -> str:
    lines = [f"degree {P.degree()}"]
    for k, c in enumerate(P.coeffs):
        lines.append(f"  a_{k} = [{format_quaternion(c, digits)}]")
    return "\n".join(lines)


def write_output(text: str, out: Optional[Union[str, Path]] = None) -> None:
    """Write to ``out`` or standard output"""
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        click.echo(text, nl=False)
        return
    path = Path(out).expanduser()
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {len(text)} bytes to {path}")


# ============================================================
# Report rendering
# ============================================================

def _verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def check_report_text(report: CheckReport, digits: int) -> str:
    f = partial(format_number, digits=digits)
    lines = [f"{report.kind} check"]
    for h in report.hypotheses:
        line = f"  hypothesis {h.name:<8} {_verdict(h.satisfied)}  margin {f(h.margin)}"
        if not h.satisfied and h.witness is not None:
            line += f"  witness [{format_quaternion(h.witness, digits)}]"
            if h.secondary_witness is not None:
                line += f" [{format_quaternion(h.secondary_witness, digits)}]"
        lines.append(line)
    lines.append(f"  conclusion {_verdict(report.conclusion_satisfied)}  margin {f(report.conclusion_margin)}")
    if report.worst_point is not None:
        lines.append(f"  worst point [{format_quaternion(report.worst_point, digits)}]")
    if report.slice_axis is not None:
        lines.append(f"  slice axis [{format_quaternion(report.slice_axis, digits)}]")
    for name, value in report.norms.items():
        lines.append(f"  ||{name}|| = {f(value)}")
    for p in report.probes:
        lines.append(
            f"  probe [{format_quaternion(p.point, digits)}]  |P'| {f(p.lhs)}  |Q'| {f(p.rhs)}  {_verdict(p.satisfied)}"
        )
    if report.equality is not None:
        lines.append(
            f"  equality case: monomial={report.equality.is_monomial} ratio {f(report.equality.ratio)}"
            f"{'  CONTRADICTION' if report.equality.contradiction else ''}"
        )
    if report.off_slice_margin is not None:
        lines.append(f"  off-slice margin {f(report.off_slice_margin)} (diagnostic)")
    lines.extend(f"  note: {n}" for n in report.notes)
    return "\n".join(lines)


def check_report_csv(report: CheckReport) -> str:
    """name,satisfied,margin with the conclusion as the last row"""
    rows = [(h.name, h.satisfied, h.margin) for h in report.hypotheses]
    rows.append(("conclusion", report.conclusion_satisfied, report.conclusion_margin))
    return _csv(("name", "satisfied", "margin"), rows)


def counterexample_text(report: CounterexampleReport, digits: int) -> str:
    f = partial(format_number, digits=digits)
    structure = all(
        (report.p_coefficients_match, report.q_coefficients_match, report.dp_coefficients_match, report.dq_coefficients_match)
    )
    lines = [
        f"expanded coefficients match: {structure}",
        f"|y| = {report.y_norm!r}",
        f"|P'(y)|^2 = {f(report.dp_squared)}  (expected {f(report.dp_squared_expected)})",
        f"|Q'(y)|^2 = {f(report.dq_squared)}  (expected {f(report.dq_squared_expected)})",
        f"min |Q| - |P| over {report.samples} points of S^3 = {f(report.sampled_margin)}",
        _verdict(report.passed),
    ]
    return "\n".join(lines)


def sweep_text(summary: SweepSummary, digits: int) -> str:
    f = partial(format_number, digits=digits)
    return "\n".join(
        [
            f"inequality sweep: {summary.count} polynomials, degree <= {summary.max_degree}, seed {summary.seed}",
            f"  min margin {f(summary.min_margin)}  min relative margin {f(summary.min_relative_margin)}",
            f"  max ||P'|| / (d ||P||) {f(summary.max_ratio)}",
            f"  failures {summary.failures}",
            _verdict(summary.failures == 0),
        ]
    )


def norm_text(report: NormReport, digits: int) -> str:
    f = partial(format_number, digits=digits)
    m = report.maximum
    lines = [
        f"||P|| = {f(m.value)}",
        f"alpha_star = {f(m.alpha_star)}",
        f"argmax = [{format_quaternion(m.argmax, digits)}]",
    ]
    if report.minimum is not None:
        lines.append(f"min |P| on S^3 = {f(report.minimum.value)} at [{format_quaternion(report.minimum.argmin, digits)}]")
    return "\n".join(lines)


def norm_csv(report: NormReport) -> str:
    m = report.maximum
    return _csv(("value", "alpha_star", "w", "x", "y", "z"), [(m.value, m.alpha_star, *m.argmax.to_list())])


def slice_extrema_text(ext: SliceExtrema, digits: int) -> str:
    f = partial(format_number, digits=digits)
    lines = [f"slice alpha = {f(ext.alpha)}, beta = {f(ext.beta)}"]
    if ext.constant:
        lines.append(f"  |P| constant = {f(ext.max)}")
    else:
        lines.append(f"  max {f(ext.max)} at axis [{format_quaternion(ext.argmax_axis, digits)}]")
        lines.append(f"  min {f(ext.min)} at axis [{format_quaternion(ext.argmin_axis, digits)}]")
    return "\n".join(lines)
