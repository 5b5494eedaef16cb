"""Matrix Market input.

Parsing is delegated to :func:`scipy.io.mmread`; this module only enforces
what the coloring code needs: coordinate format, no duplicate entries, and a
sorted CSC pattern with values aligned to it.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
import scipy.io

from .pattern import PatternError, SparsityPatternCSC

__all__ = ["MatrixMarketError", "MatrixMarketHeader", "read_header", "read_mtx"]

_FIELDS = ("pattern", "real", "integer")
_SYMMETRIES = ("general", "symmetric")


class MatrixMarketError(ValueError):
    """The file is not a usable coordinate Matrix Market file."""


@dataclass(frozen=True)
class MatrixMarketHeader:
    n_rows: int
    n_cols: int
    entries: int
    format: str
    field: str
    symmetry: str


def read_header(path):
    """Size line and banner of a Matrix Market file."""
    # scipy reports a missing file as a missing banner
    Path(path).stat()
    try:
        rows, cols, entries, fmt, field, symmetry = scipy.io.mminfo(str(path))
    except (ValueError, IndexError) as exc:
        raise MatrixMarketError(f"{path}: malformed header ({exc})") from None
    return MatrixMarketHeader(int(rows), int(cols), int(entries), fmt, field, symmetry)


def read_mtx(path):
    """Read a coordinate Matrix Market file.

    Parameters
    ----------
    path : str or Path

    Returns
    -------
    pattern : SparsityPatternCSC
        Symmetric files are expanded to full storage.
    values : ndarray or None
        Values aligned with the stored positions, or ``None`` for
        ``pattern`` files. Explicit zeros stay in the pattern.

    Raises
    ------
    MatrixMarketError
        For array files, unsupported fields or symmetries, unreadable
        entries, out-of-range indices, or duplicate entries.
    """
    path = Path(path)
    header = read_header(path)
    if header.format != "coordinate":
        raise MatrixMarketError(f"{path}: only coordinate format is supported, got {header.format}")
    if header.field not in _FIELDS:
        raise MatrixMarketError(f"{path}: unsupported field {header.field!r}")
    if header.symmetry not in _SYMMETRIES:
        raise MatrixMarketError(f"{path}: unsupported symmetry {header.symmetry!r}")
    try:
        coo = scipy.io.mmread(str(path))
    except (ValueError, IndexError, OverflowError) as exc:
        raise MatrixMarketError(f"{path}: {exc}") from None
    rows = np.asarray(coo.row, dtype=np.int64)
    cols = np.asarray(coo.col, dtype=np.int64)
    shape = (header.n_rows, header.n_cols)
    if rows.size and (rows.min() < 0 or cols.min() < 0
                      or rows.max() >= shape[0] or cols.max() >= shape[1]):
        raise MatrixMarketError(f"{path}: index out of range")
    try:
        pattern = SparsityPatternCSC.from_coo(rows, cols, shape)
    except PatternError as exc:
        raise MatrixMarketError(f"{path}: {exc}") from None
    if header.field == "pattern":
        return pattern, None
    order = np.lexsort((rows, cols))
    return pattern, np.asarray(coo.data)[order]
