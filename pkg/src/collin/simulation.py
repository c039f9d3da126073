"""Seeded Monte Carlo generators and threshold-sweep experiment drivers.

All randomness flows through the Philox counter-based generator keyed by an
explicit 64-bit seed; substreams are derived with ``split_seed`` (a splitmix64
finalizer over ``seed + (index + 1) * GOLDEN``), so replicates and per-column
streams are reproducible regardless of scheduling or thread count.
"""

from __future__ import annotations

import dataclasses
import enum
import math
from dataclasses import dataclass

import numpy as np

from .dataset import Dataset
from .diagnostics import adjustment_factors, vif_all
from .errors import InvalidDims, InvalidGamma

_MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def split_seed(seed: int, index: int) -> int:
    """Derive the substream seed for ``index`` from a master seed.

    splitmix64 finalizer applied to ``seed + (index + 1) * GOLDEN``; all
    arithmetic modulo 2**64.
    """
    z = (seed + (index + 1) * GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed & _MASK64))


class Design(enum.Enum):
    INDEPENDENT_NORMALS = "indep"
    GAMMA_CORRELATED = "gamma"
    EXAMPLE_MODEL = "example"


class Measure(enum.Enum):
    VIF = "vif"
    AVIF = "avif"


# Column parameter pools for the independently generated design. The second
# pool holds variances, not standard deviations.
INDEP_MEANS = (-5.0, -3.0, -1.0, 1.0, 3.0, 5.0)
INDEP_VARIANCES = (1.0, 9.0, 15.0)


def gen_independent_normals(n: int, p: int, seed: int) -> Dataset:
    """n observations of p mutually independent normal predictor columns.

    Per column, the mean is drawn from {+-1, +-3, +-5} and the variance from
    {1, 9, 15}. Draw order: means (p), variances (p), predictor matrix
    (n x p), response (n, standard normal; present only to satisfy the
    Dataset shape). Fully determined by ``seed``.
    """
    if p < 1 or n <= p + 1:
        raise InvalidDims(f"need n > p + 1 >= 2, got n = {n}, p = {p}")
    rng = _rng(seed)
    means = rng.choice(INDEP_MEANS, size=p)
    variances = rng.choice(INDEP_VARIANCES, size=p)
    X = rng.standard_normal((n, p)) * np.sqrt(variances) + means
    y = rng.standard_normal(n)
    return Dataset(y, X, tuple(f"X{i + 2}" for i in range(p)))


# Pool for the latent location and scale of the shared-component design.
GAMMA_PARAM_POOL = (2.0, 3.0, 4.0, 5.0)


def gen_gamma_correlated(n: int, j: int, gamma: float, seed: int) -> Dataset:
    """Predictors 2..j built as sqrt(1 - gamma^2) * M_i + gamma * M_j.

    The latent columns M_i are independent normals with one (mu, sigma) pair
    per dataset drawn from {2, 3, 4, 5}; sharing the last latent M_j gives a
    pairwise correlation of gamma^2 between any two predictors not involving
    column j (and gamma against column j itself). Each latent column i is
    generated from substream ``split_seed(seed, i)``, so datasets of
    different sizes j share their common latents, matching a progressive
    model build over one pool of latent variables.

    The response is 1 + sum of the predictors + standard normal noise; the
    inflation measures never read it.
    """
    if j < 3 or n <= j:
        raise InvalidDims(f"need n > j >= 3, got n = {n}, j = {j}")
    if not 0.0 <= gamma < 1.0:
        raise InvalidGamma(f"need 0 <= gamma < 1, got {gamma}")
    param_rng = _rng(split_seed(seed, 0))
    mu = float(param_rng.choice(GAMMA_PARAM_POOL))
    sigma = float(param_rng.choice(GAMMA_PARAM_POOL))
    latents = np.column_stack(
        [_rng(split_seed(seed, i)).normal(mu, sigma, n) for i in range(2, j + 1)]
    )
    shared = latents[:, -1]
    X = math.sqrt(1.0 - gamma * gamma) * latents + gamma * shared[:, None]
    noise = _rng(split_seed(seed, 1)).standard_normal(n)
    y = 1.0 + X.sum(axis=1) + noise
    return Dataset(y, X, tuple(f"X{i}" for i in range(2, j + 1)))


# Parameter pools for the worked 35-coefficient model: base-column locations
# and scales (sigma entries are standard deviations), the coefficient pool,
# and the noise scales of the four engineered columns and of the response.
EXAMPLE_MEANS = tuple(float(v) for v in range(-10, 11, 2))
EXAMPLE_SIGMAS = (1.0, 2.0, 3.0, 4.0, 5.0)
EXAMPLE_COEFFICIENTS = (-7.0, -5.0, -3.0, -1.0, 0.0, 1.0, 3.0, 5.0, 7.0)
EXAMPLE_PERTURBATION_SIGMAS = (2.0, 3.0, 2.0, 3.0)
EXAMPLE_NOISE_SIGMA = 7.0


@dataclass(frozen=True)
class ExampleData:
    """Generated dataset plus the ground truth used to build it."""

    dataset: Dataset
    true_coefficients: np.ndarray  # length 35, intercept first
    means: np.ndarray
    sigmas: np.ndarray
    perturbations: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]


def gen_example_dataset(n: int, seed: int, additive_engineered: bool = False) -> ExampleData:
    """35-coefficient model with four engineered near-collinear columns.

    Thirty base columns X2..X31 are independent normals with means from
    {-10, -8, ..., 10} and standard deviations from {1..5}. Four engineered
    columns then introduce controlled linear relationships:

        X32 = 4*X2 - 3*(X3 * X5) + p1      (p1 ~ N(0, 2))
        X33 = X7 - X8 - p2                 (p2 ~ N(0, 3))
        X34 = 5*X10 - 3*X13 - p3           (p3 ~ N(0, 2))
        X35 = X15 + X17 + p4               (p4 ~ N(0, 3))

    The X32 definition multiplies X3 and X5 elementwise as written;
    ``additive_engineered=True`` substitutes 4*X2 - 3*X3 + X5 + p1 for
    sensitivity runs. The response is X @ beta + u with each coefficient
    drawn from {-7, -5, -3, -1, 0, 1, 3, 5, 7} and u ~ N(0, 7). Draw order:
    means (30), sigmas (30), base matrix (n x 30), p1..p4, beta (35), u.
    """
    if n <= 35:
        raise InvalidDims(f"need n > 35, got n = {n}")
    rng = _rng(seed)
    means = rng.choice(EXAMPLE_MEANS, size=30)
    sigmas = rng.choice(EXAMPLE_SIGMAS, size=30)
    base = rng.standard_normal((n, 30)) * sigmas + means
    perturbations = tuple(rng.normal(0.0, s, n) for s in EXAMPLE_PERTURBATION_SIGMAS)
    beta = rng.choice(EXAMPLE_COEFFICIENTS, size=35)
    noise = rng.normal(0.0, EXAMPLE_NOISE_SIGMA, n)

    def col(index: int) -> np.ndarray:  # index is the variable number, X2 -> base[:, 0]
        return base[:, index - 2]

    if additive_engineered:
        x32 = 4.0 * col(2) - 3.0 * col(3) + col(5) + perturbations[0]
    else:
        x32 = 4.0 * col(2) - 3.0 * col(3) * col(5) + perturbations[0]
    x33 = col(7) - col(8) - perturbations[1]
    x34 = 5.0 * col(10) - 3.0 * col(13) - perturbations[2]
    x35 = col(15) + col(17) + perturbations[3]

    X = np.column_stack([base, x32, x33, x34, x35])
    y = beta[0] + X @ beta[1:] + noise
    dataset = Dataset(y, X, tuple(f"X{i}" for i in range(2, 36)))
    return ExampleData(
        dataset=dataset,
        true_coefficients=beta,
        means=means,
        sigmas=sigmas,
        perturbations=perturbations,
    )


@dataclass(frozen=True)
class ExperimentConfig:
    design: Design
    n: int
    max_predictors: int
    seed: int
    gamma: float = 0.0
    threshold: float = 10.0
    measure: Measure = Measure.VIF

    def __post_init__(self):
        if self.n <= 3:
            raise InvalidDims(f"need n > 3, got n = {self.n}")
        if not 2 <= self.max_predictors < self.n:
            raise InvalidDims(
                f"need 2 <= max_predictors < n, got {self.max_predictors} with n = {self.n}"
            )
        if not 0.0 <= self.gamma < 1.0:
            raise InvalidGamma(f"need 0 <= gamma < 1, got {self.gamma}")
        if self.design is Design.EXAMPLE_MODEL and self.max_predictors > 34:
            raise InvalidDims("the worked example has 34 predictor columns")


@dataclass(frozen=True)
class ExperimentResult:
    """Sweep of the maximum inflation measure against model size.

    ``series`` holds (k, max measure over the model's predictors) ordered by
    k; ``threshold_k`` is the smallest k whose value strictly exceeds the
    configured threshold, or None when no swept model size does.
    """

    series: tuple[tuple[int, float], ...]
    threshold_k: int | None
    seed: int
    config: ExperimentConfig


def _max_vif_series(config: ExperimentConfig) -> list[tuple[int, float]]:
    """(k, max plain VIF) for k = 3 .. min(max_predictors + 1, n - 1)."""
    k_top = min(config.max_predictors + 1, config.n - 1)
    ks = range(3, k_top + 1)
    if config.design is Design.GAMMA_CORRELATED:
        datasets = (gen_gamma_correlated(config.n, k, config.gamma, config.seed) for k in ks)
    else:
        if config.design is Design.INDEPENDENT_NORMALS:
            full = gen_independent_normals(config.n, config.max_predictors, config.seed)
        else:
            full = gen_example_dataset(config.n, config.seed).dataset
        datasets = (full.prefix(k - 1) for k in ks)
    return [(k, max(vif_all(d).values())) for k, d in zip(ks, datasets)]


def _apply_measure(config: ExperimentConfig, raw: list[tuple[int, float]], measure: Measure) -> ExperimentResult:
    if measure is Measure.AVIF:
        series = tuple((k, adjustment_factors(config.n, k).a * value) for k, value in raw)
    else:
        series = tuple(raw)
    threshold_k = next((k for k, value in series if value > config.threshold), None)
    echo = dataclasses.replace(config, measure=measure)
    return ExperimentResult(series=series, threshold_k=threshold_k, seed=config.seed, config=echo)


def find_threshold_k(config: ExperimentConfig) -> ExperimentResult:
    """Sweep model size and report the first threshold exceedance.

    For each k the maximum measure is taken over the first k - 1 predictors
    (the shared-component design rebuilds its columns at every k, because its
    shared latent is the current last column). Deterministic for a given
    config.
    """
    return _apply_measure(config, _max_vif_series(config), config.measure)


def run_figure_experiment(config: ExperimentConfig) -> tuple[ExperimentResult, ExperimentResult]:
    """Both measure sweeps over one generated dataset sequence.

    The adjusted series equals a(n, k) times the plain series pointwise, by
    definition of the adjusted measure.
    """
    raw = _max_vif_series(config)
    return (
        _apply_measure(config, raw, Measure.VIF),
        _apply_measure(config, raw, Measure.AVIF),
    )


def series_rows(vif_result: ExperimentResult, avif_result: ExperimentResult) -> list[tuple[int, float, float]]:
    """Merge a measure pair into (k, max_vif, max_avif) rows."""
    avif = dict(avif_result.series)
    return [(k, value, avif[k]) for k, value in vif_result.series]
