"""Student-t critical values and the two-threshold significance decision.

Each coefficient's |t| statistic is compared against the classic critical
value t_{n-k}(1 - alpha/2) and against the design-size adjusted value
sqrt(a(n, k)) times that. The joint outcome is classified into one of three
options:

* ``A``: rejected under both rules; the relationship survives any variance
  inflation.
* ``B``: rejected under neither; no evidence of a relationship.
* ``C``: rejected only under the adjusted rule; the classic non-rejection is
  attributable to the number of predictors rather than genuine collinearity.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from scipy import special

from .diagnostics import adjustment_factors
from .errors import InvalidDesign, InvalidProbability
from .ols import OlsFit

DEFAULT_ALPHA = 0.05


class Option(enum.Enum):
    A = "a"
    B = "b"
    C = "c"


@dataclass(frozen=True)
class DecisionRecord:
    name: str
    t_exp: float
    t_crit: float
    at_crit: float
    reject_classic: bool
    reject_adjusted: bool
    option: Option


def t_quantile(df: int, p: float) -> float:
    """Quantile of the Student t distribution with ``df`` degrees of freedom.

    Computed through the regularized incomplete beta inverse, using the tail
    identity F(t) = 1 - I_x(df/2, 1/2)/2 with x = df/(df + t^2) for t > 0.
    Antisymmetric about p = 0.5 by construction.
    """
    if df < 1:
        raise InvalidDesign(f"degrees of freedom must be >= 1, got {df}")
    if not 0.0 < p < 1.0:
        raise InvalidProbability(f"probability must lie in (0, 1), got {p}")
    if p == 0.5:
        return 0.0
    tail = 2.0 * min(p, 1.0 - p)
    x = float(special.betaincinv(0.5 * df, 0.5, tail))
    magnitude = math.sqrt(df * (1.0 - x) / x) if x > 0 else math.inf
    return magnitude if p > 0.5 else -magnitude


def decide(t_exp: float, n: int, k: int, alpha: float = DEFAULT_ALPHA, name: str = "") -> DecisionRecord:
    """Classify one |t| statistic under the classic and adjusted rules.

    Rejection uses strict inequality; a statistic exactly at a threshold does
    not reject.
    """
    if k < 2 or n <= k:
        raise InvalidDesign(f"need n > k >= 2, got n = {n}, k = {k}")
    if not 0.0 < alpha < 1.0:
        raise InvalidProbability(f"alpha must lie in (0, 1), got {alpha}")
    if t_exp < 0:
        raise InvalidDesign(f"t_exp must be non-negative, got {t_exp}")
    t_crit = t_quantile(n - k, 1.0 - alpha / 2.0)
    at_crit = adjustment_factors(n, k).sqrt_a * t_crit
    reject_classic = t_exp > t_crit
    reject_adjusted = t_exp > at_crit
    if reject_classic:
        option = Option.A
    elif reject_adjusted:
        option = Option.C
    else:
        option = Option.B
    return DecisionRecord(
        name=name,
        t_exp=t_exp,
        t_crit=t_crit,
        at_crit=at_crit,
        reject_classic=reject_classic,
        reject_adjusted=reject_adjusted,
        option=option,
    )


def decision_table(fit: OlsFit, alpha: float = DEFAULT_ALPHA) -> list[DecisionRecord]:
    """One decision per coefficient, intercept first.

    The intercept row is reported for completeness; selection procedures
    never act on it.
    """
    return [
        decide(test.t_exp, fit.n, fit.k, alpha=alpha, name=test.name)
        for test in fit.coef_tests
    ]
