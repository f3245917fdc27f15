"""Shared matrix file schema and delimited-output helpers.

Operators travel as JSON objects ``{"dims": [d1, ..., dk], "re": [[...]],
"im": [[...]]}`` with row-major entries and finite doubles. CSV output prints
every numeric with 12 significant digits so identical runs are byte-identical.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .states import DensityMatrix

SIG_DIGITS = 12


def matrix_to_json_dict(matrix: np.ndarray, dims) -> dict:
    m = np.asarray(matrix, dtype=complex)
    return {
        "dims": [int(d) for d in dims],
        "re": m.real.tolist(),
        "im": m.imag.tolist(),
    }


def save_matrix_json(path, matrix: np.ndarray, dims) -> None:
    Path(path).write_text(json.dumps(matrix_to_json_dict(matrix, dims)) + "\n")


def _component(doc: dict, key: str, n: int) -> np.ndarray:
    rows = doc[key]
    if not isinstance(rows, list) or len(rows) != n or any(
        not isinstance(r, list) or len(r) != n for r in rows
    ):
        raise ValueError(f"'{key}' must be a {n}x{n} array of numbers")
    arr = np.asarray(rows, dtype=float)
    bad = np.argwhere(~np.isfinite(arr))
    if bad.size:
        r, c = (int(v) for v in bad[0])
        raise ValueError(f"non-finite entry in '{key}' at row {r}, col {c}")
    return arr


def load_matrix_json(path) -> tuple[np.ndarray, tuple[int, ...]]:
    """Read an operator in the shared schema; reports the first offending entry on failure."""
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON ({exc})") from exc
    for key in ("dims", "re", "im"):
        if key not in doc:
            raise ValueError(f"{path}: missing required key '{key}'")
    dims = tuple(int(d) for d in doc["dims"])
    if any(d < 1 for d in dims):
        raise ValueError(f"{path}: dims must be positive integers, got {list(dims)}")
    n = int(np.prod(dims))
    try:
        re = _component(doc, "re", n)
        im = _component(doc, "im", n)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc
    return re + 1j * im, dims


def load_density_matrix(path) -> DensityMatrix:
    matrix, dims = load_matrix_json(path)
    return DensityMatrix(matrix, dims)


def format_number(value) -> str:
    """Canonical text form: booleans lowercase, floats at 12 significant digits."""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.{SIG_DIGITS}g}"


def csv_lines(header, rows) -> list[str]:
    """Render rows (sequences or dicts keyed by header) as CSV lines."""
    lines = [",".join(header)]
    for row in rows:
        if isinstance(row, dict):
            row = [row[h] for h in header]
        lines.append(",".join(format_number(v) for v in row))
    return lines


def round_floats(obj, sig: int = SIG_DIGITS):
    """Round every float in a JSON-ready structure to `sig` significant digits."""
    if isinstance(obj, dict):
        return {k: round_floats(v, sig) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v, sig) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (float, np.floating)):
        return float(f"{float(obj):.{sig}g}")
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    return obj
