"""CSV emission with a fixed float format and an optional # header block."""

import sys
from typing import Optional, Sequence, TextIO

import numpy as np

from config.settings import CSV_FLOAT_FORMAT


def format_header_block(values: dict) -> str:
    """Render '# key = value' lines for a metadata block."""
    return "".join(f"# {key} = {CSV_FLOAT_FORMAT % value}\n" for key, value in values.items())


def write_csv(
    columns: Sequence[str],
    rows: np.ndarray,
    out: Optional[str] = None,
    metadata: Optional[dict] = None,
) -> None:
    """
    Write rows as comma-separated values with a header row.

    Floats use the %.9e format regardless of locale.

    Args:
        columns: Column names, in output order
        rows: 2-D array with one column per name
        out: Output path; standard output when None
        metadata: Optional values written as a '#' block above the header
    """
    rows = np.atleast_2d(np.asarray(rows, dtype=float))
    if rows.size and rows.shape[1] != len(columns):
        raise ValueError(f"Expected {len(columns)} columns, got {rows.shape[1]}")

    if out is None:
        _write(sys.stdout, columns, rows, metadata)
        return
    with open(out, "w", encoding="utf-8", newline="") as handle:
        _write(handle, columns, rows, metadata)


def _write(stream: TextIO, columns: Sequence[str], rows: np.ndarray, metadata: Optional[dict]) -> None:
    if metadata:
        stream.write(format_header_block(metadata))
    np.savetxt(stream, rows, fmt=CSV_FLOAT_FORMAT, delimiter=",", header=",".join(columns), comments="")
