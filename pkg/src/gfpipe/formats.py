"""Rendering and exact serialization of engine values.

Three formats: ``table`` (aligned, human-readable, polynomials in
descending powers of r with explicit signs), ``csv`` (one row per line,
minimal quoting), and ``json`` (loss-free; every coefficient is carried as
decimal strings of unbounded size).  JSON writing is deterministic, so
decode-then-encode is byte-identical.
"""

from __future__ import annotations

import io
import json

from .cfrac import JFraction, SFraction
from .errors import TypeErrorValue
from .ratfun import FieldElem, PONE
from .series import Series
from .triangles import RecurrenceCoeffs, SquareMatrix, Triangle


# -- JSON encoding ------------------------------------------------------------


def _enc_fe(v: FieldElem):
    num = [str(c) for c in v.num] or ["0"]
    if v.den == PONE:
        return num
    return {"num": num, "den": [str(c) for c in v.den]}


def _dec_fe(obj) -> FieldElem:
    if isinstance(obj, list):
        return FieldElem([int(c) for c in obj])
    if isinstance(obj, dict):
        return FieldElem(
            [int(c) for c in obj["num"]], [int(c) for c in obj["den"]]
        )
    raise ValueError(f"not a coefficient encoding: {obj!r}")


def to_jsonable(value) -> dict:
    if isinstance(value, Series):
        return {
            "kind": "series",
            "order": value.prec,
            "entries": [_enc_fe(c) for c in value.coeffs],
        }
    if isinstance(value, Triangle):
        return {
            "kind": "triangle",
            "rows": value.n_rows,
            "entries": [[_enc_fe(c) for c in row] for row in value.rows],
        }
    if isinstance(value, SquareMatrix):
        return {
            "kind": "matrix",
            "rows": value.size,
            "entries": [[_enc_fe(c) for c in row] for row in value.rows],
        }
    if isinstance(value, JFraction):
        return {
            "kind": "jfrac",
            "entries": [
                [_enc_fe(c) for c in value.b],
                [_enc_fe(c) for c in value.lam],
            ],
        }
    if isinstance(value, SFraction):
        return {"kind": "sfrac", "entries": [_enc_fe(c) for c in value.s]}
    if isinstance(value, RecurrenceCoeffs):
        return {
            "kind": "recurrence",
            "entries": [
                [_enc_fe(c) for c in value.alpha],
                [_enc_fe(c) for c in value.beta],
            ],
        }
    if isinstance(value, FieldElem):
        return {"kind": "fieldelem", "entries": _enc_fe(value)}
    raise TypeErrorValue(f"cannot serialize {type(value).__name__}")


def from_jsonable(obj: dict):
    kind = obj.get("kind")
    entries = obj.get("entries")
    if kind == "series":
        return Series([_dec_fe(c) for c in entries])
    if kind == "triangle":
        return Triangle([[_dec_fe(c) for c in row] for row in entries])
    if kind == "matrix":
        return SquareMatrix([[_dec_fe(c) for c in row] for row in entries])
    if kind == "jfrac":
        return JFraction(
            [_dec_fe(c) for c in entries[0]], [_dec_fe(c) for c in entries[1]]
        )
    if kind == "sfrac":
        return SFraction([_dec_fe(c) for c in entries])
    if kind == "recurrence":
        return RecurrenceCoeffs(
            [_dec_fe(c) for c in entries[0]], [_dec_fe(c) for c in entries[1]]
        )
    if kind == "fieldelem":
        return _dec_fe(entries)
    raise ValueError(f"unknown value kind {kind!r}")


def to_json(value) -> str:
    return json.dumps(to_jsonable(value), separators=(",", ":"))


def from_json(text: str):
    return from_jsonable(json.loads(text))


# -- table and csv ------------------------------------------------------------


def _aligned(rows: list) -> str:
    cells = [[str(v) for v in row] for row in rows]
    ncols = max(len(row) for row in cells)
    widths = [0] * ncols
    for row in cells:
        for j, s in enumerate(row):
            widths[j] = max(widths[j], len(s))
    lines = []
    for row in cells:
        line = ",  ".join(s.rjust(widths[j]) for j, s in enumerate(row))
        lines.append(line.rstrip())
    return "\n".join(lines)


def _csv_rows(rows: list) -> str:
    import csv

    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
    for row in rows:
        writer.writerow([str(v) for v in row])
    return buf.getvalue()


def format_value(value, fmt: str = "table") -> str:
    """Render a value; table and csv are for reading, json is for reloading."""
    if fmt == "json":
        return to_json(value)
    if isinstance(value, Series):
        rows = [list(value.coeffs)]
    elif isinstance(value, (Triangle, SquareMatrix)):
        rows = [list(r) for r in value.rows]
    elif isinstance(value, JFraction):
        if fmt == "table":
            return "b:      " + ", ".join(str(v) for v in value.b) + "\n" + \
                   "lambda: " + ", ".join(str(v) for v in value.lam)
        rows = [list(value.b), list(value.lam)]
    elif isinstance(value, SFraction):
        rows = [list(value.s)]
    elif isinstance(value, RecurrenceCoeffs):
        if fmt == "table":
            return "alpha: " + ", ".join(str(v) for v in value.alpha) + "\n" + \
                   "beta:  " + ", ".join(str(v) for v in value.beta)
        rows = [list(value.alpha), list(value.beta)]
    elif isinstance(value, FieldElem):
        rows = [[value]]
    else:
        raise TypeErrorValue(f"cannot format {type(value).__name__}")
    if fmt == "csv":
        return _csv_rows(rows)
    if isinstance(value, Series):
        return ", ".join(str(v) for v in value.coeffs)
    if isinstance(value, FieldElem):
        return str(value)
    return _aligned(rows)
