"""JSON/CSV documents for exact matrices.  Rationals always travel as strings."""

from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction
from typing import Iterable

from .basis import BasisElement, CoordinateVector, OrthogonalBasis
from .exact import RationalArray, RationalMatrix

_CANONICAL = re.compile(r"-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?")


class FormatError(ValueError):
    """Malformed matrix document."""


def format_rational(x) -> str:
    """'p/q' with q > 1, plain integer otherwise."""
    return str(Fraction(x))


def parse_rational(s) -> Fraction:
    if isinstance(s, bool):
        raise FormatError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, float):
        raise FormatError(f"floats are not accepted, write {s!r} as a string fraction")
    if not isinstance(s, str):
        raise FormatError(f"not a rational: {s!r}")
    text = s.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"not a rational: {s!r}") from exc


def is_canonical(s: str) -> bool:
    return bool(_CANONICAL.fullmatch(s)) and format_rational(parse_rational(s)) == s


def array_document(arr: RationalArray, **meta) -> dict:
    doc = {}
    if arr.ndim == 2:
        doc["rows"], doc["cols"] = arr.shape
    else:
        doc["shape"] = list(arr.shape)
    doc["entries"] = [format_rational(x) for x in arr.flat()]
    for key, value in meta.items():
        if value is not None:
            doc[key] = format_rational(value) if isinstance(value, Fraction) else value
    return doc


def element_document(e: BasisElement) -> dict:
    return array_document(e.matrix, tag=e.tag, index=list(e.index),
                          squared_norm=e.squared_norm)


def basis_document(basis: OrthogonalBasis) -> dict:
    return {"basis": basis.name, "size": len(basis),
            "elements": [element_document(e) for e in basis]}


def coordinates_document(coords: CoordinateVector, basis: OrthogonalBasis) -> dict:
    return {
        "basis": basis.name,
        "labels": [e.label() for e in basis],
        "coefficients": [format_rational(c) for c in coords.coefficients],
        "residual_is_zero": coords.residual_is_zero,
        "residual": array_document(coords.residual),
    }


def parse_document(doc) -> RationalArray:
    """Accept a matrix document, an n-d document with "shape", or nested row lists."""
    if isinstance(doc, list):
        if not doc or not all(isinstance(r, list) for r in doc):
            raise FormatError("expected a list of rows")
        width = len(doc[0])
        if width == 0 or any(len(r) != width for r in doc):
            raise FormatError("rows must be nonempty and of equal length")
        return RationalMatrix([[parse_rational(x) for x in r] for r in doc])
    if not isinstance(doc, dict) or "entries" not in doc:
        raise FormatError("document needs an 'entries' field")
    entries = [parse_rational(x) for x in doc["entries"]]
    if "shape" in doc:
        shape = tuple(int(s) for s in doc["shape"])
        if len(shape) == 2:
            return RationalMatrix.from_flat(shape[0], shape[1], entries)
        try:
            return RationalArray(shape, entries)
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    try:
        rows, cols = int(doc["rows"]), int(doc["cols"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError("document needs integer 'rows' and 'cols'") from exc
    if rows < 1 or cols < 1 or rows * cols != len(entries):
        raise FormatError(f"{len(entries)} entries do not fill {rows}x{cols}")
    return RationalMatrix.from_flat(rows, cols, entries)


def dumps(obj, indent: int | None = 2) -> str:
    return json.dumps(obj, indent=indent)


def loads_matrix(text: str) -> RationalArray:
    """Parse JSON (document or nested rows) or CSV of rationals."""
    stripped = text.strip()
    if not stripped:
        raise FormatError("empty input")
    if stripped[0] in "[{":
        try:
            return parse_document(json.loads(stripped))
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
    rows = [r for r in csv.reader(io.StringIO(stripped))
            if r and not r[0].lstrip().startswith("#")]
    return parse_document([[c for c in r] for r in rows])


def matrix_csv(arr: RationalArray) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if arr.ndim == 2:
        for row in arr.tolist():
            writer.writerow([format_rational(x) for x in row])
    else:
        writer.writerow(["# shape"] + [str(s) for s in arr.shape])
        writer.writerow([format_rational(x) for x in arr.flat()])
    return buf.getvalue()


def documents_csv(docs: Iterable[tuple[str, RationalArray]]) -> str:
    """Matrices one after another, each preceded by a '# label' line."""
    parts = [f"# {label}\n" + matrix_csv(arr) for label, arr in docs]
    return "\n".join(parts)


def rows_csv(header: list[str], rows: Iterable[Iterable]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_rational(x) if isinstance(x, Fraction) else x for x in row])
    return buf.getvalue()
