"""State files and report formatting.

A state file is a JSON document::

    {"format_version": 1, "dim_a": m, "dim_b": n,
     "real_part": [[...], ...], "imag_part": [[...], ...]}

Floats are written with Python's shortest round-trip ``repr`` so a reload
reproduces every entry bit for bit. Decoding problems raise
:class:`~concurrence_bound.errors.ParseError`; well-formed documents that
describe an invalid state raise
:class:`~concurrence_bound.errors.ValidationError`.
"""

import json
from pathlib import Path

import numpy as np

from .errors import ParseError, ValidationError
from .states import BipartiteState

FORMAT_VERSION = 1

CSV_COLUMNS = (
    "label",
    "dim_a",
    "dim_b",
    "ppt_norm",
    "realignment_norm",
    "negativity",
    "ccnr_violation",
    "concurrence_lower_bound",
    "bound_source",
    "entangled",
)

REPORT_FORMATS = ("text", "csv-row", "structured")


def state_to_document(rho):
    mat = rho.matrix
    return {
        "format_version": FORMAT_VERSION,
        "dim_a": rho.dim_a,
        "dim_b": rho.dim_b,
        "real_part": mat.real.tolist(),
        "imag_part": mat.imag.tolist(),
    }


def _reject_constant(name):
    raise ParseError(f"non-finite literal {name} is not allowed")


def _matrix_field(doc, key):
    value = doc[key]
    if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
        raise ParseError(f"{key} must be a list of rows")
    lengths = {len(row) for row in value}
    if len(lengths) > 1:
        raise ParseError(f"{key} rows have unequal lengths {sorted(lengths)}")
    for row in value:
        for x in row:
            if isinstance(x, bool) or not isinstance(x, (int, float)):
                raise ParseError(f"{key} contains a non-numeric entry {x!r}")
    return np.array(value, dtype=np.float64).reshape(len(value), lengths.pop() if lengths else 0)


def state_from_document(doc):
    """Decode and validate a state document (already parsed from JSON)."""
    if not isinstance(doc, dict):
        raise ParseError("state document must be a JSON object")
    missing = [k for k in ("format_version", "dim_a", "dim_b", "real_part", "imag_part") if k not in doc]
    if missing:
        raise ParseError(f"missing keys: {', '.join(missing)}")
    if doc["format_version"] != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {doc['format_version']!r}")
    for key in ("dim_a", "dim_b"):
        if isinstance(doc[key], bool) or not isinstance(doc[key], int):
            raise ParseError(f"{key} must be an integer")
    real = _matrix_field(doc, "real_part")
    imag = _matrix_field(doc, "imag_part")
    if real.shape != imag.shape:
        raise ValidationError("dimension", f"real_part {real.shape} and imag_part {imag.shape} differ")
    return BipartiteState(real + 1j * imag, doc["dim_a"], doc["dim_b"])


def dumps_state(rho):
    return json.dumps(state_to_document(rho), indent=1)


def loads_state(text):
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    return state_from_document(doc)


def save_state(rho, path):
    """Write ``rho`` to ``path``, replacing any existing file."""
    Path(path).write_text(dumps_state(rho) + "\n", encoding="utf-8")


def load_state(path):
    """Read and validate a state file.

    Raises
    ------
    ParseError
        The file is not a well-formed state document.
    ValidationError
        The document describes a matrix that is not a valid state; the
        ``invariant`` attribute names the violated property.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not UTF-8 text ({exc.reason})") from None
    return loads_state(text)


def _fixed(x):
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def report_to_dict(report):
    """Plain-dict mirror of an :class:`EntanglementReport`."""
    bound = report.bound
    return {
        "label": report.label,
        "dim_a": report.dim_a,
        "dim_b": report.dim_b,
        "scores": report.scores.as_dict(),
        "bound": {
            "value": bound.value,
            "source": bound.source,
            "raw_bound": bound.raw_bound,
            "m_used": bound.m_used,
        },
        "eof_lower_bound": report.eof_lower_bound,
        "entangled": report.entangled,
    }


def csv_fields(report):
    s = report.scores
    return [
        report.label,
        str(report.dim_a),
        str(report.dim_b),
        _fixed(s.ppt_norm),
        _fixed(s.realignment_norm),
        _fixed(s.negativity),
        _fixed(s.ccnr_violation),
        _fixed(report.bound.value),
        report.bound.source,
        "true" if report.entangled else "false",
    ]


def write_report(report, fmt="text"):
    """Render a report as ``"text"``, ``"csv-row"`` (alias ``"csv"``) or ``"structured"`` (JSON).

    Text uses six significant digits; CSV uses six decimal places in the
    column order of :data:`CSV_COLUMNS`; structured output keeps full
    precision.
    """
    if fmt == "csv":
        fmt = "csv-row"
    if fmt == "csv-row":
        return ",".join(csv_fields(report))
    if fmt == "structured":
        return json.dumps(report_to_dict(report), indent=2)
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}; choose from {REPORT_FORMATS}")
    s, b = report.scores, report.bound
    lines = [
        f"label: {report.label}",
        f"dimensions: {report.dim_a} x {report.dim_b}",
        f"ppt_norm: {s.ppt_norm:.6g}",
        f"realignment_norm: {s.realignment_norm:.6g}",
        f"negativity: {s.negativity:.6g}",
        f"ccnr_violation: {s.ccnr_violation:.6g}",
        f"min_pt_eigenvalue: {s.min_pt_eigenvalue:.6g}",
        f"concurrence_lower_bound: {b.value:.6g} (source: {b.source})",
    ]
    if report.eof_lower_bound is not None:
        lines.append(f"eof_lower_bound: {report.eof_lower_bound:.6g}")
    lines.append(f"entangled: {'yes' if report.entangled else 'no'}")
    return "\n".join(lines)
