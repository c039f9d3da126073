"""CSV ingestion for the command-line surface."""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .dataset import Dataset
from .errors import MissingResponse, NonNumericCell, ParseError, TooFewRows


def load_csv(path, response_column: str) -> Dataset:
    """Read a UTF-8 CSV with a header row into a Dataset.

    The named response column becomes the response; every other column is a
    predictor, in header order. Line and column numbers in errors are
    1-based, the header being line 1. Blank trailing lines are ignored.
    """
    with open(Path(path), "r", encoding="utf-8", newline="") as handle:
        rows = list(csv.reader(handle))
    if not rows:
        raise ParseError(1, 1, "empty file")
    header = [cell.strip() for cell in rows[0]]
    if response_column not in header:
        raise MissingResponse(
            f"response column {response_column!r} not in header {header}"
        )
    response_idx = header.index(response_column)

    body: list[list[float]] = []
    for line_no, row in enumerate(rows[1:], start=2):
        if all(cell.strip() == "" for cell in row):
            continue
        if len(row) != len(header):
            raise ParseError(line_no, len(row) + 1, f"expected {len(header)} cells, found {len(row)}")
        values = []
        for col_no, cell in enumerate(row, start=1):
            text = cell.strip()
            try:
                values.append(float(text))
            except ValueError:
                raise NonNumericCell(line_no, col_no, cell) from None
        body.append(values)

    k = len(header)  # predictors + response mirrors predictors + intercept
    if len(body) <= k:
        raise TooFewRows(f"{len(body)} data rows cannot support {k - 1} predictors (need n > k)")
    table = np.asarray(body, dtype=float)
    predictor_idx = [i for i in range(len(header)) if i != response_idx]
    return Dataset(
        table[:, response_idx],
        table[:, predictor_idx],
        tuple(header[i] for i in predictor_idx),
    )
