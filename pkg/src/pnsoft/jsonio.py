"""Loading and saving sets.

Canonical format is JSON: {"parameters": [...], "universe": [...],
"cells": [[{"t":, "i":, "f":, "mu":}, ...], ...]} with one row per
parameter. Numbers parse into exact fractions (0.7 reads as 7/10) and save
back out as exact decimal literals, so a load/save cycle is the identity
byte for byte on values. A CSV importer covers spreadsheet-born data, one
line per cell.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path

from .errors import SchemaError
from .sets import PnsSet, validate


def decimal_string(value) -> str:
    """Exact decimal rendering of a rational when one exists.

    Denominators made of twos and fives print exactly (4/5 -> "0.8");
    anything else falls back to the float repr.
    """
    fr = Fraction(value)
    sign = "-" if fr < 0 else ""
    fr = abs(fr)
    den = fr.denominator
    scale2 = scale5 = 0
    while den % 2 == 0:
        den //= 2
        scale2 += 1
    while den % 5 == 0:
        den //= 5
        scale5 += 1
    if den != 1:
        return repr(float(value))
    scale = max(scale2, scale5)
    scaled = fr.numerator * 10 ** scale // fr.denominator
    if scale == 0:
        return sign + str(scaled)
    digits = str(scaled).rjust(scale + 1, "0")
    whole, frac = digits[:-scale], digits[-scale:].rstrip("0")
    return sign + (whole + "." + frac if frac else whole)


def to_document(s: PnsSet) -> dict:
    """Plain dict in the canonical layout, values still exact."""
    return {
        "parameters": list(s.parameters),
        "universe": list(s.universe),
        "cells": [
            [{"t": c.triple.truth, "i": c.triple.indeterminacy,
              "f": c.triple.falsity, "mu": c.mu} for c in row]
            for row in s.cells
        ],
    }


def from_document(doc) -> PnsSet:
    """Validate a parsed document and build the set; all problems at once."""
    violations = validate(doc)
    if violations:
        raise SchemaError(
            "invalid document: " + "; ".join(violations), violations=violations)
    rows = [
        [(c["t"], c["i"], c["f"], c["mu"]) for c in row]
        for row in doc["cells"]
    ]
    return PnsSet.from_rows(doc["parameters"], doc["universe"], rows)


def dumps_pns(doc, number=decimal_string) -> str:
    """Serialize a document with full control over number formatting."""
    out = ["{"]
    out.append('  "parameters": ['
               + ", ".join(json.dumps(p) for p in doc["parameters"]) + "],")
    out.append('  "universe": ['
               + ", ".join(json.dumps(u) for u in doc["universe"]) + "],")
    out.append('  "cells": [')
    last = len(doc["cells"]) - 1
    for r, row in enumerate(doc["cells"]):
        cells = ", ".join(
            '{"t": %s, "i": %s, "f": %s, "mu": %s}'
            % (number(c["t"]), number(c["i"]), number(c["f"]), number(c["mu"]))
            for c in row)
        out.append("    [" + cells + "]" + ("," if r < last else ""))
    out.append("  ]")
    out.append("}")
    return "\n".join(out) + "\n"


def _reject_constant(name):
    raise SchemaError(f"non-finite number {name} is not allowed")


def loads_pns(text: str) -> PnsSet:
    """Parse JSON text into a set; decimals become exact fractions."""
    try:
        doc = json.loads(text, parse_float=Fraction,
                         parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"JSON parse error at line {exc.lineno}, "
                          f"column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise SchemaError("top level JSON value must be an object")
    return from_document(doc)


def load_pns(path) -> PnsSet:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from None
    try:
        return loads_pns(text)
    except SchemaError as exc:
        raise SchemaError(f"{path}: {exc}", violations=exc.violations) from None


def save_pns(s: PnsSet, path) -> None:
    Path(path).write_text(dumps_pns(to_document(s)))


CSV_COLUMNS = ("parameter", "element", "t", "i", "f", "mu")


def load_csv(path) -> PnsSet:
    """Import a set from CSV with columns parameter, element, t, i, f, mu.

    The delimiter may be comma or semicolon; with semicolons, decimal
    commas inside number fields are normalized to points. Every
    (parameter, element) pair must appear exactly once; label order follows
    first appearance.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from None
    return loads_csv(text, source=str(path))


def loads_csv(text: str, source: str = "<csv>") -> PnsSet:
    first = text.splitlines()[0] if text.splitlines() else ""
    delimiter = ";" if first.count(";") >= first.count(",") and ";" in first else ","
    reader = csv.reader(io.StringIO(text), delimiter=delimiter)
    rows = [row for row in reader if any(field.strip() for field in row)]
    if not rows:
        raise SchemaError(f"{source}: empty CSV")
    header = [h.strip().lower() for h in rows[0]]
    if header != list(CSV_COLUMNS):
        raise SchemaError(
            f"{source}: header must be {', '.join(CSV_COLUMNS)}; got {', '.join(header)}")
    seen = {}
    parameters, universe = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(CSV_COLUMNS):
            raise SchemaError(
                f"{source}: line {lineno}: expected {len(CSV_COLUMNS)} fields, got {len(row)}")
        p, u = row[0].strip(), row[1].strip()
        numbers = []
        for name, field in zip(CSV_COLUMNS[2:], row[2:]):
            field = field.strip()
            if delimiter == ";":
                field = field.replace(",", ".")  # decimal comma
            try:
                numbers.append(Fraction(field))
            except (ValueError, ZeroDivisionError):
                raise SchemaError(
                    f"{source}: line {lineno}: bad number for {name}: {field!r}") from None
        if (p, u) in seen:
            raise SchemaError(f"{source}: line {lineno}: duplicate cell ({p}, {u})")
        seen[(p, u)] = tuple(numbers)
        if p not in parameters:
            parameters.append(p)
        if u not in universe:
            universe.append(u)
    missing = [(p, u) for p in parameters for u in universe if (p, u) not in seen]
    if missing:
        where = ", ".join(f"({p}, {u})" for p, u in missing[:5])
        raise SchemaError(f"{source}: incomplete grid, missing cells {where}")
    grid = [[seen[(p, u)] for u in universe] for p in parameters]
    return PnsSet.from_rows(parameters, universe, grid)


def load_any(path) -> PnsSet:
    """Dispatch on file extension: .csv imports, anything else parses as JSON."""
    if Path(path).suffix.lower() == ".csv":
        return load_csv(path)
    return load_pns(path)
