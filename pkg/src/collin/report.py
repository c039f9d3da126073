"""Assembled diagnostic documents with stable, key-sorted JSON serialization."""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass

import numpy as np

from .diagnostics import CollinearityReport
from .inference import DecisionRecord
from .ols import OlsFit
from .selection import ModelComparison, SelectionTrace

TOOL_VERSION = "0.1.0"

# JSON has no spelling for non-finite floats; they are carried as strings and
# restored on load so documents round-trip exactly.
_NONFINITE = {"Infinity": math.inf, "-Infinity": -math.inf, "NaN": math.nan}


def _plain(value):
    """Normalize numpy containers and scalars to plain Python values."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value.tolist()]
    if isinstance(value, (np.floating, float)):
        return float(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


def _encode(value):
    """As ``_plain``, but with non-finite floats replaced by string sentinels."""
    value = _plain(value)
    if isinstance(value, dict):
        return {k: _encode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_encode(v) for v in value]
    if isinstance(value, float):
        if math.isinf(value):
            return "Infinity" if value > 0 else "-Infinity"
        if math.isnan(value):
            return "NaN"
    return value


def decode_floats(value):
    """Invert the non-finite string sentinels after ``json.loads``."""
    if isinstance(value, dict):
        return {k: decode_floats(v) for k, v in value.items()}
    if isinstance(value, list):
        return [decode_floats(v) for v in value]
    if isinstance(value, str) and value in _NONFINITE:
        return _NONFINITE[value]
    return value


def config_hash(payload: dict) -> str:
    """sha256 over the canonical JSON encoding of an invocation payload."""
    canonical = json.dumps(_encode(payload), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def fit_summary(fit: OlsFit) -> dict:
    return {
        "n": fit.n,
        "k": fit.k,
        "df_resid": fit.df_resid,
        "scr": fit.scr,
        "sigma_hat": fit.sigma_hat,
        "r2": fit.r2,
        "adj_r2": fit.adj_r2,
        "aic": fit.aic,
        "f_stat": fit.f_stat,
        "f_pvalue": fit.f_pvalue,
        "coefficients": [
            {
                "name": test.name,
                "estimate": test.estimate,
                "std_error": test.std_error,
                "t_exp": test.t_exp,
            }
            for test in fit.coef_tests
        ],
    }


def collinearity_summary(report: CollinearityReport) -> dict:
    return {
        "n": report.n,
        "k": report.k,
        "threshold": report.threshold,
        "weight_a": report.weight_a,
        "condition_number": report.condition_number,
        "corr_det": report.corr_det,
        "vif": dict(report.vif),
        "avif": dict(report.avif),
        "vif_flags": list(report.vif_flags),
        "avif_flags": list(report.avif_flags),
    }


def decision_rows(records: list[DecisionRecord]) -> list[dict]:
    return [
        {
            "name": record.name,
            "t_exp": record.t_exp,
            "t_crit": record.t_crit,
            "at_crit": record.at_crit,
            "reject_classic": record.reject_classic,
            "reject_adjusted": record.reject_adjusted,
            "option": record.option.value,
        }
        for record in records
    ]


def selection_summary(trace: SelectionTrace) -> dict:
    return {
        "rule": trace.rule.value,
        "alpha": trace.alpha,
        "steps": [
            {
                "action": step.action,
                "name": step.name,
                "t_exp": step.t_exp,
                "t_crit": step.t_crit,
                "at_crit": step.at_crit,
                "model_k": step.model_k,
            }
            for step in trace.steps
        ],
        "final_names": list(trace.final_names),
        "final_fit": fit_summary(trace.final_fit),
    }


def comparison_summary(comparison: ModelComparison) -> dict:
    return {
        "criteria_agree": comparison.criteria_agree,
        "rows": [
            {
                "label": row.label,
                "k": row.k,
                "adj_r2": row.adj_r2,
                "aic": row.aic,
                "rank_adj_r2": row.rank_adj_r2,
                "rank_aic": row.rank_aic,
            }
            for row in comparison.rows
        ],
    }


@dataclass(frozen=True)
class ReportDocument:
    """Full diagnostic report: fit, collinearity, decisions, optional selection.

    ``to_json`` emits a key-sorted document; ``from_json`` restores an equal
    instance, non-finite floats included.
    """

    fit: dict
    collinearity: dict
    decisions: list
    selection: dict | None
    provenance: dict

    def to_dict(self) -> dict:
        return {
            "fit": self.fit,
            "collinearity": self.collinearity,
            "decisions": self.decisions,
            "selection": self.selection,
            "provenance": self.provenance,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(_encode(self.to_dict()), sort_keys=True, indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        raw = decode_floats(json.loads(text))
        return cls(
            fit=raw["fit"],
            collinearity=raw["collinearity"],
            decisions=raw["decisions"],
            selection=raw["selection"],
            provenance=raw["provenance"],
        )


def build_report(
    fit: OlsFit,
    report: CollinearityReport,
    records: list[DecisionRecord],
    trace: SelectionTrace | None = None,
    seed: int | None = None,
    invocation: dict | None = None,
) -> ReportDocument:
    provenance = {
        "seed": seed,
        "config_hash": config_hash(invocation or {}),
        "version": TOOL_VERSION,
    }
    return ReportDocument(
        fit=_plain(fit_summary(fit)),
        collinearity=_plain(collinearity_summary(report)),
        decisions=_plain(decision_rows(records)),
        selection=_plain(selection_summary(trace)) if trace is not None else None,
        provenance=_plain(provenance),
    )
