"""Command-line front end: model checks, lemma suite, simulations.

Exit codes partition outcomes:
  0  success (for `check`: consistent with proportional influxes)
  1  parse/config error (bad files, bad flags); nothing is written
  2  domain error while evaluating a model; nothing is written
  3  `check`: consistent, but a nonzero influx discrepancy remains
  4  `check`: a violation of the equality conditions was found
  5  `lemmas`: at least one representation check failed
  6  `simulate`: the requested dt violates the CFL guard

Reports are deterministic: identical (command, inputs, seed) produce
byte-identical JSON. JSON is the stable machine contract; the text
format is human-oriented and may change.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile

from .autodiff import DomainError
from .constitutive import (
    ModelFormatError,
    ModelValidationError,
    load_model,
    model_to_dict,
)
from .entropy_principle import (
    VERDICT_NONPROPORTIONAL,
    VERDICT_VIOLATION,
    check_model,
)
from .expr import ExprError
from .gn3_sim import (
    CFLError,
    ScenarioFormatError,
    load_scenario,
    run_scenario,
    bundled_scenarios,
)
from .library import bundled_models
from .representation_lab import run_lemma_suite

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_DOMAIN = 2
EXIT_NONPROPORTIONAL = 3
EXIT_VIOLATION = 4
EXIT_LEMMA_FAILURE = 5
EXIT_CFL = 6


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".gn3flux-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, out: str | None) -> None:
    if out:
        _write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _check_text(report: dict) -> str:
    lines = [
        f"model:   {report['model']}",
        f"verdict: {report['verdict']}",
        f"states:  {report['n_states']} (seed {report['seed']})",
        f"search:  worst {report['search']['magnitude']:.3e} "
        f"after {report['search']['evaluations']} evaluations",
        f"discrepancy: max orthogonal {report['discrepancy']['max_orthogonal']:.3e}, "
        f"axial spread {report['discrepancy']['axial_spread']}",
        f"reduced dissipation (min over sweep): {report['reduced_min']:.3e}",
        "worst residuals:",
    ]
    for label, entry in sorted(report["worst"].items()):
        lines.append(f"  {label:<12} {entry['magnitude']:.3e}")
    return "\n".join(lines) + "\n"


def cmd_check(args) -> int:
    try:
        model = load_model(args.model)
    except (OSError, ModelFormatError, ModelValidationError, ExprError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        report = check_model(
            model, seed=args.seed, samples=args.samples, budget=args.budget
        ).to_dict()
    except DomainError as err:
        print(f"domain error while evaluating {model.name!r}: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    text = canonical_json(report) if args.format == "json" else _check_text(report)
    _emit(text, args.out)
    if report["verdict"] == VERDICT_VIOLATION:
        return EXIT_VIOLATION
    if report["verdict"] == VERDICT_NONPROPORTIONAL:
        return EXIT_NONPROPORTIONAL
    return EXIT_OK


def _lemmas_text(report: dict) -> str:
    lines = [f"seed {report['seed']}, samples {report['samples']}"]
    for check in report["checks"]:
        mark = "pass" if check["passed"] else "FAIL"
        lines.append(
            f"  [{mark}] {check['name']:<28} max_error {check['max_error']:.3e} "
            f"(tol {check['tol']:g})"
        )
    lines.append("all passed" if report["all_passed"] else "FAILURES PRESENT")
    return "\n".join(lines) + "\n"


def cmd_lemmas(args) -> int:
    report = run_lemma_suite(
        seed=args.seed, samples=args.samples, corrupt=args.inject_corruption
    )
    text = canonical_json(report) if args.format == "json" else _lemmas_text(report)
    _emit(text, args.out)
    return EXIT_OK if report["all_passed"] else EXIT_LEMMA_FAILURE


def _series_csv(result) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t", "x", "alpha", "alpha_dot", "xi"])
    for f, t in enumerate(result.times):
        for i, x in enumerate(result.x):
            writer.writerow(
                [
                    repr(float(t)),
                    repr(float(x)),
                    repr(float(result.alpha[f, i])),
                    repr(float(result.alpha_dot[f, i])),
                    repr(float(result.xi[f, i])),
                ]
            )
    return buf.getvalue()


def _simulate_text(summary: dict) -> str:
    lines = [f"scenario: {summary['scenario']}"]
    lines.append(
        f"grid N={summary['N']} L={summary['L']} dt={summary['dt']} "
        f"steps={summary['steps']}"
    )
    lines.append(
        f"entropy cumulative {summary['entropy']['cumulative']:.6e} "
        f"(min {summary['entropy']['min_cumulative']:.6e})"
    )
    ws = summary["wave_speed"]
    if ws["expected"] is not None:
        lines.append(f"wave speed: estimate {ws['estimate']} expected {ws['expected']}")
    if summary["kernel_l2"] is not None:
        lines.append(f"kernel L2 (relative): {summary['kernel_l2']:.3e}")
    if summary["jumps"] is not None:
        j = summary["jumps"]
        lines.append(
            f"jumps: max |q.n| {j['max_abs_q_n']:.3e}, max |h.n| {j['max_abs_h_n']:.3e}, "
            f"lambda {j['initial_lambda']:.3e} -> {j['final_lambda']:.3e}"
        )
    return "\n".join(lines) + "\n"


def cmd_simulate(args) -> int:
    try:
        scenario = load_scenario(args.scenario)
    except (OSError, ScenarioFormatError, ExprError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        result = run_scenario(scenario)
    except CFLError as err:
        print(f"CFL rejection: {err}", file=sys.stderr)
        return EXIT_CFL
    except ExprError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    if args.out:
        _write_atomic(args.out + ".summary.json", canonical_json(result.summary))
        _write_atomic(args.out + ".series.csv", _series_csv(result))
    else:
        if args.format == "csv":
            sys.stdout.write(_series_csv(result))
        elif args.format == "text":
            sys.stdout.write(_simulate_text(result.summary))
        else:
            sys.stdout.write(canonical_json(result.summary))
    return EXIT_OK


def cmd_export(args) -> int:
    os.makedirs(os.path.join(args.dir, "models"), exist_ok=True)
    os.makedirs(os.path.join(args.dir, "scenarios"), exist_ok=True)
    for name, model in bundled_models().items():
        path = os.path.join(args.dir, "models", f"{name}.json")
        _write_atomic(path, canonical_json(model_to_dict(model)))
    for name, scenario in bundled_scenarios().items():
        path = os.path.join(args.dir, "scenarios", f"{name}.json")
        _write_atomic(path, canonical_json(scenario))
    print(f"wrote bundled models and scenarios under {args.dir}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gn3flux",
        description="entropy-principle checks and a 1D type III heat simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="check a model file for admissibility")
    check.add_argument("--model", required=True, help="model JSON path")
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--samples", type=int, default=10000)
    check.add_argument("--budget", type=int, default=10000)
    check.add_argument("--out", default=None, help="write the report here")
    check.add_argument("--format", choices=("json", "text"), default="json")
    check.set_defaults(fn=cmd_check)

    lemmas = sub.add_parser("lemmas", help="run the representation/lemma suite")
    lemmas.add_argument("--seed", type=int, default=0)
    lemmas.add_argument("--samples", type=int, default=10000)
    lemmas.add_argument("--out", default=None)
    lemmas.add_argument("--format", choices=("json", "text"), default="json")
    lemmas.add_argument(
        "--inject-corruption", action="store_true", help=argparse.SUPPRESS
    )
    lemmas.set_defaults(fn=cmd_lemmas)

    simulate = sub.add_parser("simulate", help="run a scenario file")
    simulate.add_argument("--scenario", required=True, help="scenario JSON path")
    simulate.add_argument(
        "--out",
        default=None,
        help="base path; writes <out>.summary.json and <out>.series.csv",
    )
    simulate.add_argument("--format", choices=("json", "text", "csv"), default="json")
    simulate.set_defaults(fn=cmd_simulate)

    export = sub.add_parser("export", help="write bundled models and scenarios")
    export.add_argument("--dir", required=True)
    export.set_defaults(fn=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        # argparse exits 2 on usage errors; fold into the config code
        return EXIT_CONFIG if err.code else EXIT_OK
    return args.fn(args)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
