"""Command-line interface: verify (batch suites), certify, wrad.

Exit codes: 0 when every check passes, 1 when any check fails, 2 for
configuration or input-file problems.
"""

from __future__ import annotations

import argparse
import sys

from . import serialize, wradius
from .errors import (
    CertificationFailed,
    ConfigError,
    G1RadError,
    IoError,
    ParseError,
    SpectrumOnBoundary,
)
from .runner import (
    ALL_SUITES,
    TrialConfig,
    emit_report,
    load_operator,
    render_report,
    report_to_json,
    run_suite,
    run_trial,
)


def _parse_dims(text: str) -> tuple:
    try:
        dims = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise ConfigError(f"bad dims list {text!r}") from exc
    if not dims:
        raise ConfigError("dims list is empty")
    return dims


def _parse_suites(text: str) -> tuple:
    if text.strip() == "all":
        return ALL_SUITES
    suites = tuple(part.strip() for part in text.split(",") if part.strip())
    if not suites:
        raise ConfigError("suites list is empty")
    return suites


def _parse_replay(text: str) -> tuple:
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError("--replay expects SUITE:DIM:TRIAL")
    suite = parts[0]
    try:
        dim, trial = int(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ConfigError(f"bad replay spec {text!r}") from exc
    if dim < 1 or trial < 0:
        raise ConfigError("replay dim must be >= 1 and trial >= 0")
    return suite, dim, trial


def _cmd_verify(args) -> int:
    config = TrialConfig(
        master_seed=args.seed,
        dims=_parse_dims(args.dims),
        trials_per_suite=args.trials,
        rho_max=args.rho_max,
        atoms=args.atoms,
        suites=_parse_suites(args.suites),
        quadrature_nodes=args.nodes,
        report_format=args.format,
    )
    config.validate()
    if args.replay is not None:
        suite, dim, trial = _parse_replay(args.replay)
        if suite not in config.suites:
            raise ConfigError(f"replay suite {suite!r} not in the selected suites")
        report = run_trial(config, suite, dim, trial)
        sys.stdout.write(serialize.dumps(report_to_json(report)) + "\n")
        return 0 if report.passed else 1

    result = run_suite(config)
    for suite in result.suites:
        print(
            f"{suite.suite}: {suite.passed}/{suite.total} passed, "
            f"max ratio {suite.max_ratio:.6f}, {suite.wall_time:.2f}s",
            file=sys.stderr,
        )
    if args.out is not None:
        emit_report(result.suites, result.details, config.report_format, args.out, config)
        print(f"report written to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(render_report(result.suites, result.details,
                                       config.report_format, config))
    all_passed = all(s.passed == s.total for s in result.suites)
    print("RESULT: " + ("PASS" if all_passed else "FAIL"), file=sys.stderr)
    return 0 if all_passed else 1


def _cmd_certify(args) -> int:
    try:
        op = load_operator(args.input, circle_samples=args.samples)
    except CertificationFailed as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return 1
    payload = {
        "certificate": float(op.certificate),
        "d": float(op.d),
        "n": op.dim,
        "normal": op.unitary is not None,
    }
    sys.stdout.write(serialize.dumps(payload) + "\n")
    return 0


def _cmd_wrad(args) -> int:
    import json

    try:
        with open(args.input, "r", encoding="utf-8") as handle:
            obj = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read matrix file {args.input}: {exc}") from exc
    matrix = serialize.matrix_from_json(obj)
    result = wradius.numerical_radius(matrix)
    payload = {
        "value": result.value,
        "theta_star": result.theta_star,
        "grid_points": result.grid_points,
    }
    sys.stdout.write(serialize.dumps(payload) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g1rad",
        description="Randomized verification of numerical-radius inequalities "
                    "for growth-condition operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run inequality suites on seeded random instances")
    verify.add_argument("--suites", default="all",
                        help="comma-separated suite names, or 'all'")
    verify.add_argument("--dims", default="2,3,4,6,8", help="comma-separated dimensions")
    verify.add_argument("--trials", type=int, default=200, help="trials per (suite, dim)")
    verify.add_argument("--seed", type=int, default=42, help="master seed")
    verify.add_argument("--rho-max", type=float, default=0.8, dest="rho_max",
                        help="spectral radius bound for generated operators")
    verify.add_argument("--atoms", type=int, default=8,
                        help="atoms per generated boundary measure")
    verify.add_argument("--nodes", type=int, default=512, help="quadrature nodes")
    verify.add_argument("--format", choices=("json", "csv"), default="json")
    verify.add_argument("--out", default=None, help="report path (default: stdout)")
    verify.add_argument("--replay", default=None, metavar="SUITE:DIM:TRIAL",
                        help="re-run one trial and print its report")
    verify.set_defaults(func=_cmd_verify)

    certify = sub.add_parser("certify", help="check an operator file against the growth condition")
    certify.add_argument("--input", required=True, help="operator JSON file")
    certify.add_argument("--samples", type=int, default=64,
                         help="points per sampling circle")
    certify.set_defaults(func=_cmd_certify)

    wrad = sub.add_parser("wrad", help="print the numerical radius of a matrix file")
    wrad.add_argument("--input", required=True, help="matrix JSON file")
    wrad.set_defaults(func=_cmd_wrad)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ParseError, SpectrumOnBoundary, IoError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except G1RadError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
