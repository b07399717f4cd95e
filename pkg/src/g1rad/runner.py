"""Seeded batch driver for the inequality suites.

Every trial derives its RNG stream from a SHA-256 hash of
(master_seed, suite, dim, trial), so any single report can be replayed
without rerunning the batch, and parallel execution folds results in
trial order to keep emitted reports byte-identical to a serial run.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import funcalc, g1gen, ineq, linalg, serialize
from .errors import CertificationFailed, ConfigError, IoError, ParseError
from .g1gen import CERT_THRESHOLD, G1Operator
from .ineq import InequalityReport

ALL_SUITES = (
    "lemma21a", "lemma21b", "lemma21c", "lemma21d", "lemma21e", "lemma21f",
    "thm22", "cor23", "thm24", "rem25", "cor26", "rem27",
)

_VARIANTS = {
    "lemma21a": ("",),
    "lemma21b": ("+", "-"),
    "lemma21c": ("+", "-"),
    "lemma21d": ("",),
    "lemma21e": ("",),
    "lemma21f": ("",),
    "thm22": ("sum", "diff"),
    "cor23": ("re", "im"),
    "thm24": ("commutator", "anticommutator2X"),
    "rem25": ("commutator", "anticommutator2X"),
    "cor26": ("im", "re_plus_I"),
    "rem27": ("commutator", "anticommutator2X"),
}


@dataclass(frozen=True)
class TrialConfig:
    """Population and scheduling parameters for a verification run."""

    master_seed: int = 42
    dims: tuple = (2, 3, 4, 6, 8)
    trials_per_suite: int = 200
    rho_max: float = 0.8
    atoms: int = 8
    suites: tuple = ALL_SUITES
    quadrature_nodes: int = 512
    report_format: str = "json"

    def validate(self) -> None:
        if not self.suites:
            raise ConfigError("at least one suite must be selected")
        unknown = [s for s in self.suites if s not in ALL_SUITES]
        if unknown:
            raise ConfigError(f"unknown suites: {', '.join(unknown)}")
        if not self.dims or any(int(d) < 1 for d in self.dims):
            raise ConfigError("dims must be a non-empty list of positive integers")
        if self.trials_per_suite < 1:
            raise ConfigError("trials_per_suite must be at least 1")
        if not 0.0 < self.rho_max < 1.0:
            raise ConfigError("rho_max must lie in (0, 1)")
        if self.atoms < 1:
            raise ConfigError("atoms must be at least 1")
        if self.quadrature_nodes < 32:
            raise ConfigError("quadrature_nodes must be at least 32")
        if self.report_format not in ("json", "csv"):
            raise ConfigError("report_format must be 'json' or 'csv'")

    def to_json(self) -> dict:
        return {
            "master_seed": int(self.master_seed),
            "dims": [int(d) for d in self.dims],
            "trials_per_suite": int(self.trials_per_suite),
            "rho_max": float(self.rho_max),
            "atoms": int(self.atoms),
            "suites": list(self.suites),
            "quadrature_nodes": int(self.quadrature_nodes),
            "report_format": self.report_format,
        }


@dataclass(frozen=True)
class SuiteReport:
    """Aggregate over all trials of one suite."""

    suite: str
    total: int
    passed: int
    max_ratio: float
    argmax_seed: int
    argmax_dim: int
    wall_time: float

    def to_json(self) -> dict:
        # wall_time is console-only: emitted reports must be byte-identical
        # across runs.
        return {
            "suite": self.suite,
            "total": self.total,
            "passed": self.passed,
            "max_ratio": self.max_ratio,
            "argmax_seed": self.argmax_seed,
            "argmax_dim": self.argmax_dim,
        }


@dataclass
class RunResult:
    suites: list
    details: list


def trial_seed(master_seed: int, suite: str, dim: int, trial: int) -> int:
    """Stable 64-bit stream seed for one (suite, dim, trial) cell."""
    tag = f"{master_seed}:{suite}:{dim}:{trial}".encode()
    return int.from_bytes(hashlib.sha256(tag).digest()[:8], "big")


def _ginibre(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def _sub_seed(rng: np.random.Generator) -> int:
    return int(rng.integers(0, 1 << 62))


def run_trial(config: TrialConfig, suite: str, dim: int, trial: int) -> InequalityReport:
    """Draw the trial's inputs from its derived seed and run the checker.

    Multi-variant suites rotate their variants with the trial index.
    """
    if suite not in ALL_SUITES:
        raise ConfigError(f"unknown suite {suite!r}")
    seed = trial_seed(config.master_seed, suite, dim, trial)
    rng = np.random.default_rng(seed)
    variants = _VARIANTS[suite]
    variant = variants[trial % len(variants)]

    if suite == "lemma21a":
        return ineq.check_lemma21_a(_ginibre(rng, dim), _ginibre(rng, dim), seed=seed)
    if suite == "lemma21b":
        return ineq.check_lemma21_b(_ginibre(rng, dim), _ginibre(rng, dim), variant, seed=seed)
    if suite == "lemma21c":
        a, b, x, y = (_ginibre(rng, dim) for _ in range(4))
        return ineq.check_lemma21_c(a, b, x, y, variant, seed=seed)
    if suite == "lemma21d":
        a, b, x, y = (_ginibre(rng, dim) for _ in range(4))
        return ineq.check_lemma21_d(a, b, x, y, seed=seed)
    if suite == "lemma21e":
        return ineq.check_lemma21_e(_ginibre(rng, dim), _ginibre(rng, dim), seed=seed)
    if suite == "lemma21f":
        x = _ginibre(rng, dim)
        theta = float(rng.uniform(0.0, 2.0 * np.pi))
        return ineq.check_lemma21_f(x, theta, seed=seed)

    f = funcalc.random_herglotz(_sub_seed(rng), config.atoms)
    opa = g1gen.random_g1(_sub_seed(rng), dim, config.rho_max)
    nodes = config.quadrature_nodes
    if suite == "thm22":
        return ineq.check_thm22(f, opa, _ginibre(rng, dim), variant, seed=seed, nodes=nodes)
    if suite == "cor23":
        return ineq.check_cor23(f, opa, variant, seed=seed, nodes=nodes)
    opb = g1gen.random_g1(_sub_seed(rng), dim, config.rho_max)
    if suite == "thm24":
        return ineq.check_thm24(f, opa, opb, _ginibre(rng, dim), variant, seed=seed, nodes=nodes)
    if suite == "rem25":
        x = linalg.herm_part(_ginibre(rng, dim))
        return ineq.check_rem25(f, opa, opb, x, variant, seed=seed, nodes=nodes)
    if suite == "cor26":
        return ineq.check_cor26(f, opa, opb, variant, seed=seed, nodes=nodes)
    return ineq.check_rem27(f, opa, opb, _ginibre(rng, dim), variant, seed=seed, nodes=nodes)


def worker_count() -> int:
    env = os.environ.get("WRAD_THREADS")
    if env is not None:
        try:
            value = int(env)
        except ValueError as exc:
            raise ConfigError(f"WRAD_THREADS must be an integer, got {env!r}") from exc
        if value < 1:
            raise ConfigError("WRAD_THREADS must be at least 1")
        return value
    return os.cpu_count() or 1


def run_suite(config: TrialConfig) -> RunResult:
    """Run every (suite, dim, trial) cell and aggregate one report per suite."""
    config.validate()
    tasks = [
        (suite, int(dim), trial)
        for suite in config.suites
        for dim in config.dims
        for trial in range(config.trials_per_suite)
    ]

    def one(task):
        suite, dim, trial = task
        start = time.perf_counter()
        report = run_trial(config, suite, dim, trial)
        return report, time.perf_counter() - start

    workers = worker_count()
    if workers == 1:
        outcomes = [one(t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(one, tasks))

    by_suite: dict[str, list[InequalityReport]] = {s: [] for s in config.suites}
    elapsed = {s: 0.0 for s in config.suites}
    details: list[InequalityReport] = []
    for (suite, _, _), (report, dt) in zip(tasks, outcomes):
        by_suite[suite].append(report)
        elapsed[suite] += dt
        details.append(report)

    suites = []
    for suite in config.suites:
        reports = by_suite[suite]
        max_ratio = 0.0
        argmax = reports[0]
        for report in reports:
            if np.isfinite(report.ratio) and report.ratio > max_ratio:
                max_ratio = report.ratio
                argmax = report
        suites.append(SuiteReport(
            suite=suite,
            total=len(reports),
            passed=sum(1 for r in reports if r.passed),
            max_ratio=max_ratio,
            argmax_seed=argmax.seed,
            argmax_dim=argmax.dim,
            wall_time=elapsed[suite],
        ))
    return RunResult(suites=suites, details=details)


def report_to_json(report: InequalityReport) -> dict:
    return {
        "name": report.name,
        "lhs": report.lhs,
        "rhs": report.rhs,
        "ratio": report.ratio,
        "pass": report.passed,
        "seed": report.seed,
        "dim": report.dim,
    }


def report_from_json(obj) -> InequalityReport:
    return InequalityReport(
        name=serialize._require(obj, "name", str),
        lhs=float(serialize._require(obj, "lhs", float)),
        rhs=float(serialize._require(obj, "rhs", float)),
        ratio=float(serialize._require(obj, "ratio", float)),
        passed=serialize._require(obj, "pass", bool),
        seed=serialize._require(obj, "seed", int),
        dim=serialize._require(obj, "dim", int),
    )


def render_report(suites, details, fmt: str, config: TrialConfig | None = None) -> str:
    """Render the run as a JSON document or a CSV of per-trial reports."""
    if fmt == "json":
        payload = {
            "config": config.to_json() if config is not None else None,
            "suites": [s.to_json() for s in suites],
            "details": [report_to_json(r) for r in details],
        }
        return serialize.dumps(payload) + "\n"
    if fmt == "csv":
        lines = ["name,lhs,rhs,ratio,pass,seed,dim"]
        for r in details:
            lines.append(",".join([
                r.name,
                serialize.fmt_float(r.lhs),
                serialize.fmt_float(r.rhs),
                serialize.fmt_float(r.ratio),
                "true" if r.passed else "false",
                str(r.seed),
                str(r.dim),
            ]))
        return "\n".join(lines) + "\n"
    raise ConfigError(f"report format must be 'json' or 'csv', got {fmt!r}")


def emit_report(suites, details, fmt: str, path, config: TrialConfig | None = None) -> None:
    text = render_report(suites, details, fmt, config)
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        raise IoError(f"cannot write report to {path}: {exc}") from exc


def load_operator(path, circle_samples: int = 64) -> G1Operator:
    """Load an operator file and gate it on the growth-condition certificate.

    Accepts either the full operator bundle (matrix, spectrum, unitary, d)
    or a bare matrix object with an explicit "spectrum" field; non-normal
    candidates without a spectrum cannot be admitted.
    """
    try:
        with open(path, "r", encoding="utf-8") as handle:
            obj = json.load(handle)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(obj, dict):
        raise ParseError("operator file must contain a JSON object")

    if "matrix" in obj:
        matrix = serialize.matrix_from_json(serialize._require(obj, "matrix", dict))
        spectrum = serialize.spectrum_from_json(serialize._require(obj, "spectrum", list))
        unitary = None
        if obj.get("unitary") is not None:
            unitary = serialize.matrix_from_json(obj["unitary"])
        d = float(serialize._require(obj, "d", float))
    elif "re" in obj or "im" in obj or "n" in obj:
        matrix = serialize.matrix_from_json(obj)
        if "spectrum" not in obj:
            raise ParseError("bare matrix input requires an explicit spectrum field")
        spectrum = serialize.spectrum_from_json(obj["spectrum"])
        unitary = None
        d = g1gen.boundary_distance(spectrum)
    else:
        raise ParseError("unrecognized operator file layout")

    certificate = g1gen.certify_core(matrix, spectrum, circle_samples)
    if certificate > CERT_THRESHOLD:
        raise CertificationFailed(
            f"growth-condition certificate {certificate:.6e} exceeds {CERT_THRESHOLD}"
        )
    try:
        return G1Operator(matrix=matrix, spectrum=spectrum, unitary=unitary,
                          d=d, certificate=certificate)
    except ValueError as exc:
        raise ParseError(f"inconsistent operator file: {exc}") from exc
