"""Regression data container: a response plus named predictor columns."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, InvalidDesign


@dataclass(frozen=True)
class Dataset:
    """n observations of a response and k-1 named predictor columns.

    The intercept is implicit and never stored as a column, so the total
    coefficient count is ``k = predictors + 1``. Construction validates the
    structural invariants every downstream operation relies on: n > k,
    finite values only, unique names, and at least one predictor.
    """

    response: np.ndarray
    columns: np.ndarray
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        y = np.asarray(self.response, dtype=float)
        X = np.asarray(self.columns, dtype=float)
        if y.ndim != 1:
            raise DimensionMismatch(f"response must be 1-D, got shape {y.shape}")
        if X.ndim != 2:
            raise DimensionMismatch(f"columns must be 2-D, got shape {X.shape}")
        if X.shape[0] != y.shape[0]:
            raise DimensionMismatch(
                f"response has {y.shape[0]} rows but columns have {X.shape[0]}"
            )
        names = tuple(str(name) for name in self.names)
        if not names:
            names = tuple(f"X{i + 2}" for i in range(X.shape[1]))
        if len(names) != X.shape[1]:
            raise DimensionMismatch(
                f"{X.shape[1]} columns but {len(names)} names"
            )
        if len(set(names)) != len(names):
            raise InvalidDesign("column names must be unique")
        if X.shape[1] < 1:
            raise InvalidDesign("at least one predictor column is required (k >= 2)")
        if y.shape[0] <= X.shape[1] + 1:
            raise InvalidDesign(
                f"need n > k: n = {y.shape[0]}, k = {X.shape[1] + 1}"
            )
        if not np.isfinite(y).all() or not np.isfinite(X).all():
            raise InvalidDesign("data contains non-finite values")
        object.__setattr__(self, "response", y)
        object.__setattr__(self, "columns", X)
        object.__setattr__(self, "names", names)

    @property
    def n(self) -> int:
        return self.response.shape[0]

    @property
    def k(self) -> int:
        """Total coefficient count, intercept included."""
        return self.columns.shape[1] + 1

    def design_matrix(self) -> np.ndarray:
        """Predictor matrix with a leading column of ones."""
        return np.column_stack([np.ones(self.n), self.columns])

    def column(self, name: str) -> np.ndarray:
        return self.columns[:, self.names.index(name)]

    def drop(self, name: str) -> "Dataset":
        idx = self.names.index(name)
        return Dataset(
            self.response,
            np.delete(self.columns, idx, axis=1),
            self.names[:idx] + self.names[idx + 1 :],
        )

    def keep(self, names) -> "Dataset":
        """Subset to the given predictors, preserving their requested order."""
        idx = [self.names.index(name) for name in names]
        return Dataset(self.response, self.columns[:, idx], tuple(names))

    def extended(self, name: str, values) -> "Dataset":
        """Return a copy with one extra predictor column appended."""
        extra = np.asarray(values, dtype=float).reshape(-1, 1)
        return Dataset(
            self.response,
            np.hstack([self.columns, extra]),
            self.names + (name,),
        )

    def prefix(self, count: int) -> "Dataset":
        """Keep only the first ``count`` predictor columns."""
        return Dataset(self.response, self.columns[:, :count], self.names[:count])
