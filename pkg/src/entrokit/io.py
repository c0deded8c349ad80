"""Data ingestion for the batch CLI: CSV columns, raw float64, PGM images."""

from __future__ import annotations

import csv

import numpy as np

from .errors import IngestError

FORMATS = ("csv", "raw-f64", "pgm")


def ingest(path, format: str = "csv", column=0):
    """Load a timeseries (csv, raw-f64) or a [0, 1] grayscale matrix (pgm).

    CSV is RFC-4180 style with an optional header row; ``column`` selects by
    name (requires a header) or 0-based index.  raw-f64 is a contiguous
    little-endian float64 stream.  PGM pixel values are rescaled by the
    image's full-scale value."""
    if format == "csv":
        return _ingest_csv(path, column)
    if format == "raw-f64":
        return _ingest_raw(path)
    if format == "pgm":
        return _ingest_pgm(path)
    raise IngestError(f"unknown input format {format!r}; expected one of {FORMATS}")


def _ingest_csv(path, column):
    try:
        fh = open(path, newline="", encoding="utf-8")
    except OSError as err:
        raise IngestError(f"cannot open {path}: {err}") from err
    with fh:
        reader = csv.reader(fh)
        rows = [(i + 1, row) for i, row in enumerate(reader) if row and any(c.strip() for c in row)]
    if not rows:
        raise IngestError(f"{path} contains no data rows")

    first_line, first = rows[0]
    header = None
    if not _all_floatable(first):
        header = [c.strip() for c in first]
        rows = rows[1:]
        if not rows:
            raise IngestError(f"{path} has a header but no data rows")

    if isinstance(column, str) and not column.lstrip("-").isdigit():
        if header is None:
            raise IngestError(
                f"column {column!r} requested by name but {path} has no header"
            )
        try:
            col = header.index(column)
        except ValueError:
            raise IngestError(f"no column named {column!r} in header {header}") from None
    else:
        col = int(column)

    values = np.empty(len(rows), dtype=np.float64)
    for k, (line, row) in enumerate(rows):
        if col >= len(row):
            raise IngestError(f"row has {len(row)} column(s), need index {col}", line=line)
        cell = row[col].strip()
        try:
            values[k] = float(cell)
        except ValueError:
            raise IngestError(f"cannot parse {cell!r} as a number", line=line) from None
        if not np.isfinite(values[k]):
            raise IngestError(f"non-finite value {cell!r}", line=line)
    return values


def _all_floatable(cells):
    try:
        for cell in cells:
            float(cell)
    except ValueError:
        return False
    return True


def _ingest_raw(path):
    try:
        values = np.fromfile(path, dtype="<f8")
    except OSError as err:
        raise IngestError(f"cannot read {path}: {err}") from err
    if values.size == 0:
        raise IngestError(f"{path} contains no float64 values")
    bad = ~np.isfinite(values)
    if bad.any():
        raise IngestError(
            f"non-finite value at offset {int(np.flatnonzero(bad)[0]) * 8}"
        )
    return values


def _ingest_pgm(path):
    try:
        from PIL import Image
    except ImportError as err:  # pragma: no cover
        raise IngestError("Pillow is required for PGM input") from err
    try:
        with Image.open(path) as img:
            arr = np.asarray(img, dtype=np.float64)
            mode = img.mode
    except OSError as err:
        raise IngestError(f"cannot read image {path}: {err}") from err
    if arr.ndim != 2:
        raise IngestError(f"{path} is not a single-channel grayscale image")
    full_scale = 65535.0 if mode in ("I", "I;16") else 255.0
    return arr / full_scale
