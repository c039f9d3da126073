"""Ordinary least squares via column-pivoted QR, plus the usual fit statistics."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg
from scipy import stats as _scipy_stats

from .dataset import Dataset
from .errors import DegenerateResponse, RankDeficient

# Rank cutoff, relative to the largest pivoted column norm. Near-collinear
# designs are the normal input here, so detection must be explicit rather
# than left to a solver's internal fallback.
RANK_RTOL = 1e-10


@dataclass(frozen=True)
class CoefficientTest:
    """Per-coefficient estimate, standard error, and |t| statistic."""

    name: str
    estimate: float
    std_error: float
    t_exp: float


@dataclass(frozen=True)
class FitStatistics:
    r2: float
    adj_r2: float
    aic: float
    f_stat: float
    f_pvalue: float


@dataclass(frozen=True)
class OlsFit:
    """Least-squares fit with residual and per-coefficient statistics.

    ``names`` and ``coefficients`` start with the intercept. ``scr`` is the
    sum of squared residuals, ``sigma_hat`` its degrees-of-freedom scaled
    square root. The AIC uses the Gaussian likelihood with the error scale
    counted as a parameter: n*ln(2*pi) + n*ln(scr/n) + n + 2*(k+1).
    """

    names: tuple[str, ...]
    coefficients: np.ndarray
    residuals: np.ndarray
    fitted: np.ndarray
    scr: float
    sigma_hat: float
    r2: float
    adj_r2: float
    aic: float
    f_stat: float
    f_pvalue: float
    coef_tests: tuple[CoefficientTest, ...]
    df_resid: int
    n: int
    k: int

    def response(self) -> np.ndarray:
        return self.fitted + self.residuals

    def t_exp(self, name: str) -> float:
        return self.coef_tests[self.names.index(name)].t_exp


def _statistics(y: np.ndarray, scr: float, n: int, k: int) -> FitStatistics:
    centered = y - y.mean()
    tss = float(centered @ centered)
    if tss == 0.0:
        raise DegenerateResponse("response is constant (TSS = 0)")
    r2 = 1.0 - scr / tss
    if n > k:
        adj_r2 = 1.0 - (n - 1) / (n - k) * (1.0 - r2)
    else:
        adj_r2 = r2
    aic = n * math.log(2.0 * math.pi) + n * (math.log(scr / n) if scr > 0 else -math.inf) + n + 2.0 * (k + 1)
    if k > 1 and n > k:
        if scr > 0:
            f_stat = ((tss - scr) / (k - 1)) / (scr / (n - k))
            f_stat = max(f_stat, 0.0)
            f_pvalue = float(_scipy_stats.f.sf(f_stat, k - 1, n - k))
        else:
            f_stat = math.inf
            f_pvalue = 0.0
    else:
        # Intercept-only model: no slopes to test jointly.
        f_stat = 0.0
        f_pvalue = 1.0
    return FitStatistics(r2=r2, adj_r2=adj_r2, aic=aic, f_stat=f_stat, f_pvalue=f_pvalue)


def fit_statistics(fit: OlsFit, data: Dataset) -> FitStatistics:
    """Recompute the goodness-of-fit block for ``fit`` against ``data``."""
    return _statistics(np.asarray(data.response, dtype=float), fit.scr, fit.n, fit.k)


def fit_ols(data: Dataset) -> OlsFit:
    """Fit the model response = intercept + columns @ slopes + error.

    Uses a column-pivoted QR factorization of the intercept-augmented design
    and raises ``RankDeficient`` (naming the suspect columns) when the pivoted
    diagonal falls below RANK_RTOL relative to the leading pivot. Pure
    function of its input: identical data gives identical output.
    """
    X = data.design_matrix()
    y = np.asarray(data.response, dtype=float)
    n, k = X.shape

    Q, R, piv = scipy.linalg.qr(X, mode="economic", pivoting=True)
    diag = np.abs(np.diag(R))
    tol = RANK_RTOL * diag[0] if diag[0] > 0 else 0.0
    rank = int(np.sum(diag > tol))
    if rank < k:
        labels = ("intercept",) + data.names
        suspects = [labels[piv[i]] for i in range(rank, k)]
        raise RankDeficient(suspects)

    coef_pivoted = scipy.linalg.solve_triangular(R, Q.T @ y)
    coefficients = np.empty(k)
    coefficients[piv] = coef_pivoted

    fitted = X @ coefficients
    residuals = y - fitted
    scr = float(residuals @ residuals)
    df_resid = n - k
    sigma2 = scr / df_resid
    sigma_hat = math.sqrt(sigma2)

    # (X'X)^-1 diagonal from the pivoted factor: X[:, piv] = Q R.
    r_inv = scipy.linalg.solve_triangular(R, np.eye(k))
    unscaled_pivoted = r_inv @ r_inv.T
    unscaled_diag = np.empty(k)
    unscaled_diag[piv] = np.diag(unscaled_pivoted)

    std_errors = sigma_hat * np.sqrt(np.maximum(unscaled_diag, 0.0))
    names = ("intercept",) + data.names
    tests = []
    for name, est, se in zip(names, coefficients, std_errors):
        if se > 0:
            t_exp = abs(est) / se
        else:
            t_exp = math.inf if est != 0 else 0.0
        tests.append(CoefficientTest(name=name, estimate=float(est), std_error=float(se), t_exp=float(t_exp)))

    stats = _statistics(y, scr, n, k)
    return OlsFit(
        names=names,
        coefficients=coefficients,
        residuals=residuals,
        fitted=fitted,
        scr=scr,
        sigma_hat=sigma_hat,
        r2=stats.r2,
        adj_r2=stats.adj_r2,
        aic=stats.aic,
        f_stat=stats.f_stat,
        f_pvalue=stats.f_pvalue,
        coef_tests=tuple(tests),
        df_resid=df_resid,
        n=n,
        k=k,
    )


def fit_intercept_only(response) -> OlsFit:
    """Closed-form fit of the model response = intercept + error.

    Needed by the selection procedures, whose search can start from or end at
    a model with no predictor columns (which ``Dataset`` cannot represent).
    """
    y = np.asarray(response, dtype=float)
    n = y.shape[0]
    mean = float(y.mean())
    residuals = y - mean
    scr = float(residuals @ residuals)
    sigma2 = scr / (n - 1)
    sigma_hat = math.sqrt(sigma2)
    se = math.sqrt(sigma2 / n)
    t_exp = abs(mean) / se if se > 0 else (math.inf if mean != 0 else 0.0)
    stats = _statistics(y, scr, n, 1)
    return OlsFit(
        names=("intercept",),
        coefficients=np.array([mean]),
        residuals=residuals,
        fitted=np.full(n, mean),
        scr=scr,
        sigma_hat=sigma_hat,
        r2=stats.r2,
        adj_r2=stats.adj_r2,
        aic=stats.aic,
        f_stat=stats.f_stat,
        f_pvalue=stats.f_pvalue,
        coef_tests=(CoefficientTest("intercept", mean, se, t_exp),),
        df_resid=n - 1,
        n=n,
        k=1,
    )
