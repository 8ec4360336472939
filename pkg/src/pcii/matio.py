"""Matrix file formats shared by the CLI and the elicitation service.

CSV: n rows of n comma-separated decimal or rational ("p/q") literals,
no header.  JSON: {"n": int, "rows": [[...]]} where cells may be JSON
numbers or the same literal strings.  Rational literals are parsed
exactly and then converted to binary floating point.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import NonSquareError
from .matrix import PCMatrix, validate


def parse_cell(text: str | float | int) -> float:
    """Parse one matrix cell: number, decimal literal, or exact "p/q"."""
    if isinstance(text, (int, float)):
        return float(text)
    s = text.strip()
    try:
        return float(Fraction(s))
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return float(s)
    except ValueError:
        raise ValueError(f"cannot parse matrix cell {text!r}") from None


def format_cell(value: float) -> str:
    """Shortest decimal literal that round-trips to the same double."""
    return repr(float(value))


def loads_csv(text: str, mode: str = "strict") -> PCMatrix:
    rows = [
        [parse_cell(cell) for cell in line.split(",")]
        for line in text.strip().splitlines()
        if line.strip()
    ]
    if not rows or any(len(r) != len(rows) for r in rows):
        raise NonSquareError("CSV matrix must have n rows of n cells")
    return validate(rows, mode=mode)


def dumps_csv(A: PCMatrix) -> str:
    return "\n".join(",".join(format_cell(v) for v in row) for row in A.to_rows()) + "\n"


def loads_json(text: str, mode: str = "strict") -> PCMatrix:
    doc = json.loads(text)
    rows = [[parse_cell(cell) for cell in row] for row in doc["rows"]]
    n = doc.get("n", len(rows))
    if len(rows) != n or any(len(r) != n for r in rows):
        raise NonSquareError(f"JSON matrix claims order {n} but rows disagree")
    return validate(rows, mode=mode)


def dumps_json(A: PCMatrix) -> str:
    return json.dumps({"n": A.n, "rows": A.to_rows()})


def load_matrix(path: str | Path, mode: str = "strict") -> PCMatrix:
    """Load a matrix file, dispatching on the .csv / .json extension."""
    p = Path(path)
    text = p.read_text()
    if p.suffix.lower() == ".json":
        return loads_json(text, mode=mode)
    return loads_csv(text, mode=mode)


def save_matrix(path: str | Path, A: PCMatrix) -> None:
    p = Path(path)
    if p.suffix.lower() == ".json":
        p.write_text(dumps_json(A) + "\n")
    else:
        p.write_text(dumps_csv(A))
