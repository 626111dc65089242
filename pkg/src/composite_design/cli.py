"""Command-line interface: one subcommand per design calculation plus the two
simulators.  Parameters come from flags or from a `--scenario` key-value
file; explicit flags win.  `--format json|csv` emits machine-readable output,
`--out` redirects it to a file.

Exit codes: 0 success, 1 validation/infeasibility, 2 usage.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import binary as cbe
from .design import (
    are_tte,
    format_samplesize_table,
    samplesize_tte,
    sensitivity_curves,
)
from .effects import effectsize_report, format_effect_table
from .errors import DesignError
from .law import TTEDesign, calibrate
from .scenario import load_scenario
from .simulate import simulate_cbe, simulate_tte

TTE_DEFAULTS = {
    "beta_e1": 1.0,
    "beta_e2": 1.0,
    "case": 1,
    "copula": "frank",
    "rho_type": "spearman",
    "followup_time": 1.0,
    "alpha": 0.05,
    "power": 0.80,
    "ss_formula": "schoenfeld",
    "subdivisions": 1000,
}
CBE_DEFAULTS = {
    "effm_e1": "diff",
    "effm_e2": "diff",
    "effm_ce": "diff",
    "alpha": 0.05,
    "beta": 0.20,
    "unpooled": True,
}


class UsageError(Exception):
    pass


def _add_output_flags(parser):
    parser.add_argument("--format", choices=("table", "json", "csv"), default="table")
    parser.add_argument("--out", metavar="PATH", default=None)
    parser.add_argument("--scenario", metavar="PATH", default=None)


def _add_tte_flags(parser):
    parser.add_argument("--p0-e1", type=float, dest="p0_e1")
    parser.add_argument("--p0-e2", type=float, dest="p0_e2")
    parser.add_argument("--hr-e1", type=float, dest="hr_e1")
    parser.add_argument("--hr-e2", type=float, dest="hr_e2")
    parser.add_argument("--beta-e1", type=float, dest="beta_e1")
    parser.add_argument("--beta-e2", type=float, dest="beta_e2")
    parser.add_argument("--case", type=int, choices=(1, 2, 3, 4))
    parser.add_argument("--copula", choices=("frank", "gumbel", "clayton", "independence"))
    parser.add_argument("--rho", type=float)
    parser.add_argument("--rho-type", dest="rho_type", choices=("spearman", "kendall"))
    parser.add_argument("--followup-time", type=float, dest="followup_time")
    parser.add_argument("--subdivisions", type=int)


def _add_test_flags(parser):
    parser.add_argument("--alpha", type=float)
    parser.add_argument("--power", type=float)
    parser.add_argument("--ss-formula", dest="ss_formula", choices=("schoenfeld", "freedman"))


def _add_cbe_flags(parser):
    parser.add_argument("--p0-e1", type=float, dest="p0_e1")
    parser.add_argument("--p0-e2", type=float, dest="p0_e2")
    parser.add_argument("--eff-e1", type=float, dest="eff_e1")
    parser.add_argument("--eff-e2", type=float, dest="eff_e2")
    parser.add_argument("--effm-e1", dest="effm_e1", choices=cbe.EFFECT_MEASURES)
    parser.add_argument("--effm-e2", dest="effm_e2", choices=cbe.EFFECT_MEASURES)
    parser.add_argument("--effm-ce", dest="effm_ce", choices=cbe.EFFECT_MEASURES)
    parser.add_argument("--rho", type=float)
    parser.add_argument("--alpha", type=float)
    parser.add_argument("--beta", type=float)
    parser.add_argument("--unpooled", action=argparse.BooleanOptionalAction, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="composite-design",
        description="Design calculations and simulators for composite endpoints.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("effectsize-tte", "samplesize-tte", "are-tte", "curves-tte", "simulate-tte"):
        p = sub.add_parser(name)
        _add_tte_flags(p)
        _add_output_flags(p)
        if name == "samplesize-tte":
            _add_test_flags(p)
            p.add_argument("--rho-grid", dest="rho_grid", default=None,
                           help="comma-separated association values; emits the sensitivity table")
        if name == "are-tte":
            p.add_argument("--rho-grid", dest="rho_grid", default=None,
                           help="comma-separated association values; emits the sensitivity table")
            _add_test_flags(p)
        if name == "curves-tte":
            p.add_argument("--grid", type=int, default=100)
        if name == "simulate-tte":
            p.add_argument("--sample-size", type=int, dest="sample_size")
            p.add_argument("--seed", type=int)

    for name in ("prob-cbe", "corr-bounds"):
        p = sub.add_parser(name)
        p.add_argument("--p1", type=float)
        p.add_argument("--p2", type=float)
        if name == "prob-cbe":
            p.add_argument("--rho", type=float)
        _add_output_flags(p)

    for name in ("effectsize-cbe", "samplesize-cbe", "are-cbe", "simulate-cbe"):
        p = sub.add_parser(name)
        _add_cbe_flags(p)
        _add_output_flags(p)
        if name == "simulate-cbe":
            p.add_argument("--sample-size", type=int, dest="sample_size")
            p.add_argument("--seed", type=int)

    return parser


def _merge_params(args, keys) -> dict:
    """Scenario values first, explicit flags on top."""
    merged = {}
    if getattr(args, "scenario", None):
        scenario = load_scenario(args.scenario)
        merged.update({k: v for k, v in scenario.items() if k in keys})
    for key in keys:
        value = getattr(args, key, None)
        if value is not None:
            merged[key] = value
    return merged


def _require(params: dict, names) -> None:
    missing = [n for n in names if n not in params]
    if missing:
        raise UsageError(f"missing required parameter(s): {', '.join(missing)}")


_TTE_KEYS = ("p0_e1", "p0_e2", "hr_e1", "hr_e2", "beta_e1", "beta_e2", "case",
             "copula", "rho", "rho_type", "followup_time", "subdivisions",
             "alpha", "power", "ss_formula", "sample_size", "seed", "grid")
_CBE_KEYS = ("p0_e1", "p0_e2", "eff_e1", "eff_e2", "effm_e1", "effm_e2",
             "effm_ce", "rho", "alpha", "beta", "unpooled", "sample_size", "seed")


def _tte_design(params: dict) -> tuple[TTEDesign, dict]:
    _require(params, ("p0_e1", "p0_e2", "hr_e1", "hr_e2", "rho"))
    merged = {**TTE_DEFAULTS, **params}
    design = TTEDesign(
        p0_e1=merged["p0_e1"], p0_e2=merged["p0_e2"],
        hr_e1=merged["hr_e1"], hr_e2=merged["hr_e2"], rho=merged["rho"],
        beta_e1=merged["beta_e1"], beta_e2=merged["beta_e2"], case=merged["case"],
        copula=merged["copula"], rho_type=merged["rho_type"],
        followup_time=merged["followup_time"],
    )
    return design, merged


def _cbe_design(params: dict) -> tuple[cbe.BinaryDesign, dict]:
    _require(params, ("p0_e1", "p0_e2", "eff_e1", "eff_e2", "rho"))
    merged = {**CBE_DEFAULTS, **params}
    design = cbe.BinaryDesign(
        p0_e1=merged["p0_e1"], p0_e2=merged["p0_e2"],
        eff_e1=merged["eff_e1"], eff_e2=merged["eff_e2"], rho=merged["rho"],
        effm_e1=merged["effm_e1"], effm_e2=merged["effm_e2"], effm_ce=merged["effm_ce"],
        alpha=merged["alpha"], beta=merged["beta"], unpooled=merged["unpooled"],
    )
    return design, merged


def _emit(text: str, args) -> None:
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _key_value_csv(payload: dict) -> str:
    lines = ["key,value"]
    for key, value in payload.items():
        if isinstance(value, dict):
            for inner, v in value.items():
                lines.append(f"{key}.{inner},{v}")
        else:
            lines.append(f"{key},{value}")
    return "\n".join(lines) + "\n"


def _emit_payload(payload: dict, table: str, args) -> None:
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args)
    elif args.format == "csv":
        _emit(_key_value_csv(payload), args)
    else:
        _emit(table, args)


def _columns_csv(columns: dict) -> str:
    names = list(columns)
    lines = [",".join(names)]
    length = len(next(iter(columns.values())))
    for i in range(length):
        lines.append(",".join(f"{columns[n][i]:.10g}" for n in names))
    return "\n".join(lines) + "\n"


def _columns_table(columns: dict) -> str:
    names = list(columns)
    header = " ".join(f"{n:>12}" for n in names)
    lines = [header]
    length = len(next(iter(columns.values())))
    for i in range(length):
        lines.append(" ".join(f"{columns[n][i]:12.6f}" for n in names))
    return "\n".join(lines)


def _parse_rho_grid(raw: str):
    try:
        return [float(tok) for tok in raw.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"could not parse --rho-grid value {raw!r}") from None


def _run_effectsize_tte(args) -> None:
    design, merged = _tte_design(_merge_params(args, _TTE_KEYS))
    report = effectsize_report(design, subdivisions=merged["subdivisions"])
    payload = dataclasses.asdict(report)
    _emit_payload(payload, format_effect_table(report), args)


def _run_samplesize_tte(args) -> None:
    design, merged = _tte_design(_merge_params(args, _TTE_KEYS))
    if getattr(args, "rho_grid", None):
        table = sensitivity_curves(
            design, merged["alpha"], merged["power"], merged["ss_formula"],
            _parse_rho_grid(args.rho_grid), merged["subdivisions"],
        )
        if args.format == "json":
            payload = {"rho": table.rho.tolist(), "are": table.are.tolist(),
                       "n_composite": table.n_composite.tolist()}
            _emit(json.dumps(payload, indent=2), args)
        else:
            _emit(table.to_csv().rstrip("\n"), args)
        return
    report = samplesize_tte(design, merged["alpha"], merged["power"],
                            merged["ss_formula"], merged["subdivisions"])
    payload = {
        "endpoint1": report.n_endpoint1,
        "endpoint2": report.n_endpoint2,
        "composite": report.n_composite,
        "events_composite": report.events_composite,
        "gahr": report.gahr,
        "alpha": report.alpha,
        "power": report.power,
        "formula": report.formula,
    }
    _emit_payload(payload, format_samplesize_table(report), args)


def _run_are_tte(args) -> None:
    design, merged = _tte_design(_merge_params(args, _TTE_KEYS))
    if getattr(args, "rho_grid", None):
        table = sensitivity_curves(
            design, merged["alpha"], merged["power"], merged["ss_formula"],
            _parse_rho_grid(args.rho_grid), merged["subdivisions"],
        )
        if args.format == "json":
            payload = {"rho": table.rho.tolist(), "are": table.are.tolist(),
                       "n_composite": table.n_composite.tolist()}
            _emit(json.dumps(payload, indent=2), args)
        else:
            _emit(table.to_csv().rstrip("\n"), args)
        return
    report = are_tte(design, merged["subdivisions"])
    payload = dataclasses.asdict(report)
    _emit_payload(payload, f"{report.are:.3f}", args)


def _run_curves_tte(args) -> None:
    design, merged = _tte_design(_merge_params(args, _TTE_KEYS))
    law = calibrate(design, merged["subdivisions"])
    grid = merged.get("grid", 100)
    curves = law.survival_curves(grid)
    columns = curves.columns()
    hr_grid = curves.time.copy()
    hr_grid[0] = law.quad.lower_epsilon * law.tau  # hazard ratio undefined at 0
    columns["hr_star"] = law.hr_star(hr_grid)
    if args.format == "json":
        _emit(json.dumps({k: list(map(float, v)) for k, v in columns.items()}, indent=2), args)
    elif args.format == "csv":
        _emit(_columns_csv(columns), args)
    else:
        _emit(_columns_table(columns), args)


def _run_simulate_tte(args) -> None:
    params = _merge_params(args, _TTE_KEYS)
    design, merged = _tte_design(params)
    _require(merged, ("sample_size", "seed"))
    trial = simulate_tte(design, merged["sample_size"], merged["seed"],
                         merged["subdivisions"])
    _emit_dataset(trial, args)


def _emit_dataset(trial, args) -> None:
    if args.format in ("csv", "json"):
        text = trial.to_csv()
        if args.format == "json":
            text = json.dumps(
                {name: col.tolist() for name, col in trial.columns().items()}, indent=2
            )
        _emit(text, args)
        return
    # table format: head and tail, like interactive inspection of a data frame
    columns = trial.columns()
    names = list(columns)
    total = len(trial)
    shown = list(range(min(6, total))) + (
        [None] + list(range(total - 6, total)) if total > 12 else []
    )
    lines = [" ".join(f"{n:>12}" for n in names)]
    for idx in shown:
        if idx is None:
            lines.append("...")
            continue
        cells = []
        for n in names:
            value = columns[n][idx]
            cells.append(f"{value:12d}" if float(value) == int(value) else f"{value:12.7f}")
        lines.append(" ".join(cells))
    lines.append(f"[{total} rows]")
    _emit("\n".join(lines), args)


def _run_prob_cbe(args) -> None:
    params = _merge_params(args, ("p1", "p2", "rho"))
    _require(params, ("p1", "p2"))
    value = cbe.prob_cbe(params["p1"], params["p2"], params.get("rho", 0.0))
    _emit_payload({"prob": value}, f"{value:.4f}", args)


def _run_corr_bounds(args) -> None:
    params = _merge_params(args, ("p1", "p2"))
    _require(params, ("p1", "p2"))
    lo = cbe.lower_corr(params["p1"], params["p2"])
    hi = cbe.upper_corr(params["p1"], params["p2"])
    _emit_payload({"lower": lo, "upper": hi}, f"lower {lo:.4f}\nupper {hi:.4f}", args)


def _run_effectsize_cbe(args) -> None:
    design, _ = _cbe_design(_merge_params(args, _CBE_KEYS))
    report = cbe.effectsize_cbe(design)
    table = "\n".join([
        f"Effect ({report.measure})   {report.effect:.4f}",
        f"Prob. CE reference {report.prob_ce_control:.4f}",
        f"Prob. CE treated   {report.prob_ce_treated:.4f}",
    ])
    _emit_payload(dataclasses.asdict(report), table, args)


def _run_samplesize_cbe(args) -> None:
    design, _ = _cbe_design(_merge_params(args, _CBE_KEYS))
    report = cbe.samplesize_cbe(design)
    _emit_payload(dataclasses.asdict(report), f"Total sample size {report.total}", args)


def _run_are_cbe(args) -> None:
    design, _ = _cbe_design(_merge_params(args, _CBE_KEYS))
    value = cbe.are_cbe(design)
    _emit_payload({"are": value}, f"{value:.3f}", args)


def _run_simulate_cbe(args) -> None:
    params = _merge_params(args, _CBE_KEYS + ("sample_size", "seed"))
    design, _ = _cbe_design(params)
    _require(params, ("sample_size", "seed"))
    trial = simulate_cbe(design, params["sample_size"], params["seed"])
    _emit_dataset(trial, args)


_RUNNERS = {
    "effectsize-tte": _run_effectsize_tte,
    "samplesize-tte": _run_samplesize_tte,
    "are-tte": _run_are_tte,
    "curves-tte": _run_curves_tte,
    "simulate-tte": _run_simulate_tte,
    "prob-cbe": _run_prob_cbe,
    "corr-bounds": _run_corr_bounds,
    "effectsize-cbe": _run_effectsize_cbe,
    "samplesize-cbe": _run_samplesize_cbe,
    "are-cbe": _run_are_cbe,
    "simulate-cbe": _run_simulate_cbe,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _RUNNERS[args.command](args)
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 2
    except DesignError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
