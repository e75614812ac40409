"""Reading and writing matrices.

Text format: a header line ``"n m"`` followed by ``n`` lines of ``m``
decimal integers separated by single spaces. The JSON alternative is an
array of arrays whose items are integers or decimal strings.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .linalg import IntMatrix, SkewMatrix

_INT = re.compile(r"[+-]?\d+\Z")


class MatrixFormatError(ValueError):
    pass


def _parse_int(token: str, where: str) -> int:
    if not _INT.match(token):
        raise MatrixFormatError(f"{where}: {token!r} is not a decimal integer")
    return int(token)


def parse_text(text: str) -> IntMatrix:
    lines = [ln.strip() for ln in text.strip().splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MatrixFormatError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise MatrixFormatError(f"header must be 'n m', got {lines[0]!r}")
    n, m = (_parse_int(t, "header") for t in header)
    if n < 1 or m < 1:
        raise MatrixFormatError(f"bad dimensions {n}x{m}")
    body = lines[1:]
    if len(body) != n:
        raise MatrixFormatError(f"expected {n} rows, found {len(body)}")
    rows = []
    for k, line in enumerate(body, start=2):
        tokens = line.split()
        if len(tokens) != m:
            raise MatrixFormatError(f"line {k}: expected {m} entries, found {len(tokens)}")
        rows.append([_parse_int(t, f"line {k}") for t in tokens])
    return IntMatrix(rows)


def parse_json(text: str) -> IntMatrix:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise MatrixFormatError("JSON matrix must be a non-empty array of arrays")
    rows = []
    for i, row in enumerate(data):
        out = []
        for x in row:
            if isinstance(x, bool) or not isinstance(x, (int, str)):
                raise MatrixFormatError(f"row {i}: {x!r} is not an integer")
            out.append(x if isinstance(x, int) else _parse_int(x.strip(), f"row {i}"))
        rows.append(out)
    try:
        return IntMatrix(rows)
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from None


def parse_matrix(text: str) -> IntMatrix:
    """Parse either format; JSON is recognised by a leading ``[``."""
    if text.lstrip().startswith("["):
        return parse_json(text)
    return parse_text(text)


def read_matrix(path: str | Path) -> IntMatrix:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc.strerror}") from None
    return parse_matrix(text)


def read_skew(path: str | Path) -> SkewMatrix:
    return SkewMatrix.from_matrix(read_matrix(path))


def format_text(m: IntMatrix) -> str:
    lines = [f"{m.n_rows} {m.n_cols}"]
    lines.extend(" ".join(map(str, r)) for r in m.rows)
    return "\n".join(lines) + "\n"


def format_json(m: IntMatrix) -> str:
    return json.dumps(m.tolist(), separators=(",", ":"))


def write_matrix(m: IntMatrix, path: str | Path) -> None:
    Path(path).write_text(format_text(m))
