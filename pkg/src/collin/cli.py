"""Command-line surface.

Exit codes: 0 on success, 1 on usage errors (the offending flag is printed),
2 on data errors (bad files, degenerate designs). Identical invocations
produce byte-identical stdout: reports carry no timestamps and all
randomness comes from the explicit ``--seed``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .dataio import load_csv
from .diagnostics import adjustment_factors, diagnose
from .errors import CollinError
from .inference import decision_table
from .ols import fit_ols
from .report import (
    build_report,
    comparison_summary,
    config_hash,
    fit_summary,
    selection_summary,
    TOOL_VERSION,
)
from .selection import Rule, backward_eliminate, compare_models, forward_select
from .simulation import Design, ExperimentConfig, Measure, find_threshold_k, run_figure_experiment, series_rows

TABLE_N_VALUES = range(15, 201, 5)
TABLE_K_VALUES = range(3, 16)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="collin", description="Multicollinearity diagnostics and adjusted significance rules.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_diag = sub.add_parser("diagnose", help="full diagnostic report for a CSV dataset")
    p_diag.add_argument("csv", help="input CSV with a header row")
    p_diag.add_argument("--response", required=True, help="name of the response column")
    p_diag.add_argument("--alpha", type=float, default=0.05)
    p_diag.add_argument("--threshold", type=float, default=10.0)

    p_sel = sub.add_parser("select", help="stepwise variable selection on a CSV dataset")
    p_sel.add_argument("csv")
    p_sel.add_argument("--response", required=True)
    p_sel.add_argument("--rule", required=True, choices=[r.value for r in Rule])
    p_sel.add_argument("--direction", choices=["backward", "forward"], default="backward")
    p_sel.add_argument("--alpha", type=float, default=0.05)

    p_sim = sub.add_parser("simulate", help="threshold sweep for one seeded design")
    p_sim.add_argument("--design", required=True, choices=[d.value for d in Design])
    p_sim.add_argument("--n", type=int, required=True)
    p_sim.add_argument("--gamma", type=float, default=None)
    p_sim.add_argument("--seed", type=int, required=True)
    p_sim.add_argument("--measure", choices=[m.value for m in Measure], default="vif")
    p_sim.add_argument("--max-predictors", type=int, default=None)
    p_sim.add_argument("--threshold", type=float, default=10.0)

    p_tab = sub.add_parser("tables", help="print a design-size weight grid")
    p_tab.add_argument("--what", required=True, choices=["a", "b", "sqrt-a"])

    p_fig = sub.add_parser("figures", help="sweep both measures and emit k,max_vif,max_avif rows")
    p_fig.add_argument("--n", type=int, required=True)
    p_fig.add_argument("--seed", type=int, required=True)
    p_fig.add_argument("--max-predictors", type=int, default=None)
    p_fig.add_argument("--threshold", type=float, default=10.0)
    p_fig.add_argument("--out-dir", default=None, help="also write the CSV series and a rendered figure here")

    return parser


def _default_max_predictors(design: Design, n: int) -> int:
    if design is Design.EXAMPLE_MODEL:
        return 34
    if design is Design.INDEPENDENT_NORMALS:
        # Mirrors the figure experiments: a pool of 39 generated columns,
        # capped by the estimability limit.
        return min(39, n - 2)
    return n - 2


def _cmd_diagnose(args) -> int:
    data = load_csv(args.csv, args.response)
    fit = fit_ols(data)
    report = diagnose(data, threshold=args.threshold)
    records = decision_table(fit, alpha=args.alpha)
    invocation = {
        "command": "diagnose",
        "csv": Path(args.csv).name,
        "response": args.response,
        "alpha": args.alpha,
        "threshold": args.threshold,
    }
    document = build_report(fit, report, records, seed=None, invocation=invocation)
    print(document.to_json())
    return 0


def _cmd_select(args) -> int:
    data = load_csv(args.csv, args.response)
    rule = Rule(args.rule)
    runner = backward_eliminate if args.direction == "backward" else forward_select
    trace = runner(data, rule=rule, alpha=args.alpha)
    initial = fit_ols(data)
    comparison = compare_models([initial, trace.final_fit], labels=["initial", "selected"])
    invocation = {
        "command": "select",
        "csv": Path(args.csv).name,
        "response": args.response,
        "rule": args.rule,
        "direction": args.direction,
        "alpha": args.alpha,
    }
    payload = {
        "initial_fit": fit_summary(initial),
        "selection": selection_summary(trace),
        "comparison": comparison_summary(comparison),
        "provenance": {
            "seed": None,
            "config_hash": config_hash(invocation),
            "version": TOOL_VERSION,
        },
    }
    print(_to_json(payload))
    return 0


def _to_json(payload: dict) -> str:
    from .report import _encode  # stable encoding shared with ReportDocument

    return json.dumps(_encode(payload), sort_keys=True, indent=2)


def _cmd_simulate(args) -> int:
    design = Design(args.design)
    if design is Design.GAMMA_CORRELATED and args.gamma is None:
        raise _UsageError("--gamma is required when --design gamma")
    max_predictors = args.max_predictors
    if max_predictors is None:
        max_predictors = _default_max_predictors(design, args.n)
    config = ExperimentConfig(
        design=design,
        n=args.n,
        max_predictors=max_predictors,
        seed=args.seed,
        gamma=args.gamma if args.gamma is not None else 0.0,
        threshold=args.threshold,
        measure=Measure(args.measure),
    )
    result = find_threshold_k(config)
    payload = {
        "design": design.value,
        "n": config.n,
        "max_predictors": config.max_predictors,
        "gamma": config.gamma,
        "seed": config.seed,
        "threshold": config.threshold,
        "measure": config.measure.value,
        "series": [[k, value] for k, value in result.series],
        "threshold_k": result.threshold_k,
        "provenance": {
            "seed": config.seed,
            "config_hash": config_hash({"command": "simulate", **{k: v for k, v in vars(args).items() if k != "command"}}),
            "version": TOOL_VERSION,
        },
    }
    print(_to_json(payload))
    return 0


def _grid_value(what: str, n: int, k: int) -> float:
    factors = adjustment_factors(n, k)
    if what == "a":
        return factors.a
    if what == "b":
        return factors.b
    return factors.sqrt_a


def format_table(what: str) -> str:
    """Aligned text grid of a weight over n in {15..200 step 5}, k in {3..15}."""
    width = 7
    lines = ["n\\k".rjust(5) + "".join(str(k).rjust(width) for k in TABLE_K_VALUES)]
    for n in TABLE_N_VALUES:
        cells = "".join(f"{_grid_value(what, n, k):.3f}".rjust(width) for k in TABLE_K_VALUES)
        lines.append(str(n).rjust(5) + cells)
    return "\n".join(lines)


def _cmd_tables(args) -> int:
    print(format_table(args.what))
    return 0


def _figure_csv(rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["k", "max_vif", "max_avif"])
    for k, vif_value, avif_value in rows:
        writer.writerow([k, repr(float(vif_value)), repr(float(avif_value))])
    return buffer.getvalue()


def _cmd_figures(args) -> int:
    max_predictors = args.max_predictors
    if max_predictors is None:
        max_predictors = _default_max_predictors(Design.INDEPENDENT_NORMALS, args.n)
    config = ExperimentConfig(
        design=Design.INDEPENDENT_NORMALS,
        n=args.n,
        max_predictors=max_predictors,
        seed=args.seed,
        threshold=args.threshold,
    )
    vif_result, avif_result = run_figure_experiment(config)
    rows = series_rows(vif_result, avif_result)
    text = _figure_csv(rows)
    sys.stdout.write(text)
    if args.out_dir is not None:
        from .plots import render_sweep

        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        stem = f"sweep_n{args.n}_seed{args.seed}"
        (out_dir / f"{stem}.csv").write_text(text, encoding="utf-8")
        render_sweep(rows, n=args.n, threshold=args.threshold, path=out_dir / f"{stem}.png")
    return 0


_COMMANDS = {
    "diagnose": _cmd_diagnose,
    "select": _cmd_select,
    "simulate": _cmd_simulate,
    "tables": _cmd_tables,
    "figures": _cmd_figures,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (CollinError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def cli_dispatch(argv) -> int:
    """Alias for ``main`` with an explicit argv, mirroring the library API."""
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
