"""Command line: ``ldpc-products {build,params,distance,tanner,simulate,audit} CODE``.

``CODE`` is ``fixture:NAME`` or a JSON recipe file.  Exit status 0 on
success, 1 when the check matrices do not commute, 2 on malformed input or
infeasible requests.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from collections.abc import Sequence
from pathlib import Path

from ldpc_products.codes import BbsSpec, CssCode, NoLogicalQubits, bbs_params, css_violation, ldpc_audit, tanner_export
from ldpc_products.decoders import DECODERS
from ldpc_products.distance import distance
from ldpc_products.montecarlo import NoiseModel, run_trials
from ldpc_products.recipes import RecipeError, load, serialize

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class _Invalid(Exception):
    """Input parsed but fails validation."""


def _dumps(obj: object) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_css(arg: str) -> CssCode:
    code = load(arg)
    if not isinstance(code, CssCode):
        raise RecipeError("this command needs a CSS code, not a subsystem (bbs) recipe")
    _validate(code)
    return code


def _validate(code: CssCode) -> None:
    problem = css_violation(code)
    if problem:
        raise _Invalid(problem)


def _cmd_build(args: argparse.Namespace) -> None:
    code = load(args.code)
    if isinstance(code, BbsSpec):
        payload = {"construction": "bbs", "a": code.a.to_strings()}
    else:
        _validate(code)
        payload = serialize(code)
    _emit(_dumps(payload) + "\n", args.out)


def _cmd_params(args: argparse.Namespace) -> None:
    code = load(args.code)
    if isinstance(code, BbsSpec):
        p = bbs_params(code)
        _emit(_dumps({"n": p.n, "k": p.k, "d": p.d}) + "\n", args.out)
        return
    _validate(code)
    _emit(_dumps({"n": code.n, "k": code.k}) + "\n", args.out)


def _cmd_audit(args: argparse.Namespace) -> None:
    code = _load_css(args.code)
    report = dataclasses.asdict(ldpc_audit(code))
    _emit(_dumps({"n": code.n, "k": code.k, **report}) + "\n", args.out)


def _cmd_distance(args: argparse.Namespace) -> None:
    code = _load_css(args.code)
    reports = distance(code, args.method, args.wmax)
    sides = [args.side.upper()] if args.side else ["X", "Z"]
    chosen = [reports[s] for s in sides]
    d = min(r.value for r in chosen)
    payload = {
        "d": d,
        "bound": "lower" if any(r.bound == "lower" for r in chosen) else "exact",
        "method": args.method,
    }
    for r in chosen:
        payload[f"d{r.side.lower()}"] = r.to_dict()
    _emit(_dumps(payload) + "\n", args.out)


def _cmd_tanner(args: argparse.Namespace) -> None:
    _emit(tanner_export(_load_css(args.code)).to_dot(), args.out)


def _cmd_simulate(args: argparse.Namespace) -> None:
    code = _load_css(args.code)
    px = args.px if args.px is not None else args.p
    pz = args.pz if args.pz is not None else args.p
    if px is None or pz is None:
        raise RecipeError("simulate needs --p or both --px and --pz")
    report = run_trials(code, args.decoder, NoiseModel(px, pz), args.trials, args.seed, workers=args.workers)
    if not report.code:
        report = dataclasses.replace(report, code=args.code)
    _emit(report.to_csv(header=not args.no_header), args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ldpc-products", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("code", help="fixture:NAME (shor, toric-L, surface-L, fig8) or a JSON recipe path")
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.set_defaults(func=func)
        return p

    command("build", _cmd_build, "build a recipe and print the canonical code")
    command("params", _cmd_params, "print n and k")
    command("audit", _cmd_audit, "print row and column weight maxima")
    command("tanner", _cmd_tanner, "print the Tanner graph as DOT")
    dist = command("distance", _cmd_distance, "compute dx and dz")
    dist.add_argument("--method", choices=("exhaustive", "weight-limited"), default="exhaustive")
    dist.add_argument("--wmax", type=int, help="weight limit for --method weight-limited")
    dist.add_argument("--side", choices=("X", "Z", "x", "z"), help="only this error type")
    sim = command("simulate", _cmd_simulate, "estimate the logical failure rate, print a CSV row")
    sim.add_argument("--decoder", choices=DECODERS, default="lookup")
    sim.add_argument("--trials", type=int, default=1000)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--p", type=float, help="physical error rate for both X and Z")
    sim.add_argument("--px", type=float)
    sim.add_argument("--pz", type=float)
    sim.add_argument("--workers", type=int, default=1)
    sim.add_argument("--no-header", action="store_true", help="omit the CSV header line")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        args.func(args)
    except _Invalid as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (RecipeError, NoLogicalQubits, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
