"""Stepwise variable selection under either decision rule, plus model comparison."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .dataset import Dataset
from .errors import MixedResponse
from .inference import DEFAULT_ALPHA, DecisionRecord, decision_table
from .ols import OlsFit, fit_intercept_only, fit_ols


class Rule(enum.Enum):
    CLASSIC = "classic"
    ADJUSTED = "adjusted"


def _passes(record: DecisionRecord, rule: Rule) -> bool:
    return record.reject_adjusted if rule is Rule.ADJUSTED else record.reject_classic


@dataclass(frozen=True)
class SelectionStep:
    action: str  # "removed" or "added"
    name: str
    t_exp: float
    t_crit: float
    at_crit: float
    model_k: int  # coefficient count after the step, intercept included


@dataclass(frozen=True)
class SelectionTrace:
    steps: tuple[SelectionStep, ...]
    final_fit: OlsFit
    final_names: tuple[str, ...]  # retained predictors, intercept excluded
    rule: Rule
    alpha: float


def backward_eliminate(data: Dataset, rule: Rule = Rule.CLASSIC, alpha: float = DEFAULT_ALPHA) -> SelectionTrace:
    """Iteratively drop the weakest non-significant predictor and refit.

    Each pass removes the single failing coefficient with the lowest |t|
    (ties broken by original column order), then refits; the loop stops when
    every retained coefficient rejects its null under ``rule``. The intercept
    is never a removal candidate. Previously removed columns are never
    reconsidered. Deterministic: one trace per (data, rule, alpha).
    """
    current: Dataset | None = data
    steps: list[SelectionStep] = []
    while current is not None:
        fit = fit_ols(current)
        records = decision_table(fit, alpha=alpha)[1:]
        failing = [r for r in records if not _passes(r, rule)]
        if not failing:
            return SelectionTrace(tuple(steps), fit, current.names, rule, alpha)
        order = {name: pos for pos, name in enumerate(current.names)}
        worst = min(failing, key=lambda r: (r.t_exp, order[r.name]))
        steps.append(
            SelectionStep(
                action="removed",
                name=worst.name,
                t_exp=worst.t_exp,
                t_crit=worst.t_crit,
                at_crit=worst.at_crit,
                model_k=fit.k - 1,
            )
        )
        current = current.drop(worst.name) if current.k > 2 else None
    final = fit_intercept_only(data.response)
    return SelectionTrace(tuple(steps), final, (), rule, alpha)


def forward_select(data: Dataset, rule: Rule = Rule.CLASSIC, alpha: float = DEFAULT_ALPHA) -> SelectionTrace:
    """Grow a model from intercept-only, adding the strongest passing candidate.

    At each step every remaining column is test-fitted alongside the current
    model; among candidates whose refit coefficient rejects its null under
    ``rule``, the one with the largest |t| enters (ties broken by original
    column order). The search stops when no candidate passes.
    """
    chosen: list[str] = []
    steps: list[SelectionStep] = []
    remaining = list(data.names)
    while remaining:
        best: DecisionRecord | None = None
        best_pos = -1
        for pos, candidate in enumerate(remaining):
            trial = data.keep(chosen + [candidate])
            fit = fit_ols(trial)
            record = decision_table(fit, alpha=alpha)[-1]
            if not _passes(record, rule):
                continue
            if best is None or record.t_exp > best.t_exp:
                best = record
                best_pos = pos
        if best is None:
            break
        chosen.append(best.name)
        remaining.pop(best_pos)
        steps.append(
            SelectionStep(
                action="added",
                name=best.name,
                t_exp=best.t_exp,
                t_crit=best.t_crit,
                at_crit=best.at_crit,
                model_k=len(chosen) + 1,
            )
        )
    if chosen:
        final = fit_ols(data.keep(chosen))
    else:
        final = fit_intercept_only(data.response)
    return SelectionTrace(tuple(steps), final, tuple(chosen), rule, alpha)


@dataclass(frozen=True)
class ComparisonRow:
    label: str
    k: int
    adj_r2: float
    aic: float
    rank_adj_r2: int
    rank_aic: int


@dataclass(frozen=True)
class ModelComparison:
    """Models ordered by adjusted R^2 (descending), AIC breaking ties.

    ``criteria_agree`` is False when the two statistics order the models
    differently; the disagreement is reported, never resolved.
    """

    rows: tuple[ComparisonRow, ...]
    criteria_agree: bool


def _dense_ranks(values: list[float], descending: bool) -> list[int]:
    distinct = sorted(set(values), reverse=descending)
    position = {value: rank + 1 for rank, value in enumerate(distinct)}
    return [position[value] for value in values]


def compare_models(fits: list[OlsFit], labels: list[str] | None = None) -> ModelComparison:
    """Rank fits of one response by adjusted R^2 and AIC."""
    if not fits:
        raise MixedResponse("no fits to compare")
    if labels is None:
        labels = [f"model {i + 1}" for i in range(len(fits))]
    if len(labels) != len(fits):
        raise MixedResponse("labels and fits differ in length")
    reference = fits[0].response()
    for fit in fits[1:]:
        other = fit.response()
        if other.shape != reference.shape or not np.allclose(other, reference, rtol=0.0, atol=1e-8 * max(1.0, float(np.abs(reference).max()))):
            raise MixedResponse("fits were produced from different responses")

    adj = [fit.adj_r2 for fit in fits]
    aic = [fit.aic for fit in fits]
    rank_adj = _dense_ranks(adj, descending=True)
    rank_aic = _dense_ranks(aic, descending=False)
    ordered = sorted(range(len(fits)), key=lambda i: (-adj[i], aic[i], i))
    rows = tuple(
        ComparisonRow(
            label=labels[i],
            k=fits[i].k,
            adj_r2=adj[i],
            aic=aic[i],
            rank_adj_r2=rank_adj[i],
            rank_aic=rank_aic[i],
        )
        for i in ordered
    )
    return ModelComparison(rows=rows, criteria_agree=rank_adj == rank_aic)
