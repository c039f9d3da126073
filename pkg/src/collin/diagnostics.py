"""Variance inflation factors, their sample-size adjusted variant, and
companion collinearity measures (condition number, correlation determinant).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .dataset import Dataset
from .errors import ConstantColumn, EmptyDesign, ExactCollinearity, InvalidDesign
from .parallel import ordered_map

# An auxiliary R^2 this close to one means the predictor is a numerically
# exact combination of the others; the offending column is reported instead
# of an astronomically large factor.
EXACT_COLLINEARITY_R2 = 1.0 - 1e-12

# Smallest eigenvalue ratio treated as nonsingular in the condition number.
NEAR_SINGULAR_RATIO = 1e-14

DEFAULT_THRESHOLD = 10.0


@dataclass(frozen=True)
class AdjustmentFactors:
    """Weights tied to the design size: a = (n-k+1)/(n-1), b = 1/sqrt(a).

    ``a`` rescales an inflation factor, ``sqrt_a`` rescales a critical value,
    and ``b`` rescales an observed t statistic; the three usages are
    algebraically equivalent.
    """

    a: float
    sqrt_a: float
    b: float


def adjustment_factors(n: int, k: int) -> AdjustmentFactors:
    # n = k is allowed: the weight grids tabulate that boundary cell, and the
    # formula stays positive there. Estimation itself still needs n > k.
    if k < 2 or n < k:
        raise InvalidDesign(f"need n >= k >= 2, got n = {n}, k = {k}")
    a = (n - k + 1) / (n - 1)
    sqrt_a = math.sqrt(a)
    return AdjustmentFactors(a=a, sqrt_a=sqrt_a, b=1.0 / sqrt_a)


def _aux_r2(predictors: np.ndarray, j: int) -> float:
    """R^2 of regressing column j on the remaining columns plus an intercept."""
    target = predictors[:, j]
    centered = target - target.mean()
    tss = float(centered @ centered)
    if tss == 0.0:
        raise ConstantColumn(j)
    others = np.delete(predictors, j, axis=1)
    design = np.column_stack([np.ones(predictors.shape[0]), others])
    coef = scipy.linalg.lstsq(design, target, lapack_driver="gelsy")[0]
    resid = target - design @ coef
    scr = float(resid @ resid)
    return 1.0 - scr / tss


def vif_all(data: Dataset) -> dict[str, float]:
    """Inflation factor 1/(1 - R^2_j) per predictor.

    R^2_j comes from the auxiliary regression of column j on all other
    predictors plus the intercept. With a single predictor that regression is
    intercept-only, so the factor is exactly 1. Raises ``ExactCollinearity``
    naming the first column whose auxiliary R^2 reaches the exactness cutoff.
    The per-column regressions are independent and run threaded when
    COLLIN_THREADS > 1; the result does not depend on scheduling.
    """
    P = data.columns
    p = P.shape[1]
    if p == 1:
        target = P[:, 0]
        if float(np.var(target)) == 0.0:
            raise ConstantColumn(data.names[0])
        return {data.names[0]: 1.0}

    def one(j: int) -> float:
        try:
            return _aux_r2(P, j)
        except ConstantColumn:
            raise ConstantColumn(data.names[j]) from None

    r2s = ordered_map(one, range(p))
    out: dict[str, float] = {}
    for name, r2 in zip(data.names, r2s):
        if r2 >= EXACT_COLLINEARITY_R2:
            raise ExactCollinearity(name, r2)
        out[name] = 1.0 / (1.0 - r2)
    return out


def avif_all(data: Dataset) -> dict[str, float]:
    """Adjusted inflation factors: a(n, k) times the plain factor."""
    a = adjustment_factors(data.n, data.k).a
    return {name: a * value for name, value in vif_all(data).items()}


def condition_number(data: Dataset) -> float:
    """Square root of the extreme eigenvalue ratio of the scaled cross-product.

    The intercept column is included and every column is scaled to unit
    Euclidean length (no centering). Returns ``inf`` when the smallest
    eigenvalue falls below NEAR_SINGULAR_RATIO of the largest.
    """
    X = data.design_matrix()
    if X.size == 0 or X.shape[1] == 0:
        raise EmptyDesign("design has no columns")
    norms = np.linalg.norm(X, axis=0)
    if np.any(norms == 0.0):
        return math.inf
    scaled = X / norms
    eigvals = np.linalg.eigvalsh(scaled.T @ scaled)
    lam_max = float(eigvals[-1])
    lam_min = float(max(eigvals[0], 0.0))
    if lam_min < NEAR_SINGULAR_RATIO * lam_max:
        return math.inf
    return math.sqrt(lam_max / lam_min)


def correlation_det(data: Dataset) -> float:
    """Determinant of the sample correlation matrix of the predictors."""
    P = data.columns
    variances = P.var(axis=0)
    for name, var in zip(data.names, variances):
        if var == 0.0:
            raise ConstantColumn(name)
    if P.shape[1] == 1:
        return 1.0
    corr = np.corrcoef(P, rowvar=False)
    return float(np.linalg.det(corr))


@dataclass(frozen=True)
class CollinearityReport:
    """Bundle of all per-dataset collinearity measures.

    ``vif_flags`` and ``avif_flags`` list the columns whose factor exceeds the
    threshold under each measure separately, so a column worrying under the
    plain factor but not under the adjusted one is directly visible.
    """

    vif: dict[str, float]
    avif: dict[str, float]
    weight_a: float
    condition_number: float
    corr_det: float
    n: int
    k: int
    threshold: float
    vif_flags: tuple[str, ...]
    avif_flags: tuple[str, ...]


def diagnose(data: Dataset, threshold: float = DEFAULT_THRESHOLD) -> CollinearityReport:
    """Assemble every diagnostic for one dataset."""
    vif = vif_all(data)
    a = adjustment_factors(data.n, data.k).a
    avif = {name: a * value for name, value in vif.items()}
    return CollinearityReport(
        vif=vif,
        avif=avif,
        weight_a=a,
        condition_number=condition_number(data),
        corr_det=correlation_det(data),
        n=data.n,
        k=data.k,
        threshold=threshold,
        vif_flags=tuple(name for name in data.names if vif[name] > threshold),
        avif_flags=tuple(name for name in data.names if avif[name] > threshold),
    )
