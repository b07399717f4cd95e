"""Randomized verification of numerical-radius inequalities for G1 operators.

The package computes the numerical radius with a certified witness,
evaluates Herglotz-class functions of matrices by two independent routes,
generates certified growth-condition operators, and property-tests a
catalog of operator inequalities on seeded random instances.
"""

from .errors import (
    CertificationFailed,
    ConfigError,
    DimensionMismatch,
    DomainError,
    G1RadError,
    IoError,
    NotHermitian,
    NotSelfAdjoint,
    NotUnitary,
    ParseError,
    Singular,
    SpectrumOnBoundary,
)
from .funcalc import (
    HerglotzFunction,
    apply_direct,
    apply_normal,
    eval_herglotz,
    fbar_apply,
    fbar_direct,
    random_herglotz,
    riesz_dunford,
)
from .g1gen import (
    G1Operator,
    boundary_distance,
    certify_core,
    certify_g1,
    haar_unitary,
    random_g1,
    resolvent_norm,
)
from .ineq import (
    InequalityReport,
    check_cor23,
    check_cor26,
    check_lemma21_a,
    check_lemma21_b,
    check_lemma21_c,
    check_lemma21_d,
    check_lemma21_e,
    check_lemma21_f,
    check_rem25,
    check_rem27,
    check_thm22,
    check_thm24,
)
from .linalg import (
    adjoint,
    as_matrix,
    block2x2,
    herm_part,
    hermitian_eigen,
    skew_part,
    solve,
    spectral_norm,
)
from .runner import (
    ALL_SUITES,
    RunResult,
    SuiteReport,
    TrialConfig,
    emit_report,
    load_operator,
    render_report,
    run_suite,
    run_trial,
    trial_seed,
)
from .wradius import RadiusResult, numerical_radius, numradius_lower_bound

__version__ = "0.1.0"

__all__ = [
    "ALL_SUITES",
    "CertificationFailed",
    "ConfigError",
    "DimensionMismatch",
    "DomainError",
    "G1Operator",
    "G1RadError",
    "HerglotzFunction",
    "InequalityReport",
    "IoError",
    "NotHermitian",
    "NotSelfAdjoint",
    "NotUnitary",
    "ParseError",
    "RadiusResult",
    "RunResult",
    "Singular",
    "SpectrumOnBoundary",
    "SuiteReport",
    "TrialConfig",
    "adjoint",
    "apply_direct",
    "apply_normal",
    "as_matrix",
    "block2x2",
    "boundary_distance",
    "certify_core",
    "certify_g1",
    "check_cor23",
    "check_cor26",
    "check_lemma21_a",
    "check_lemma21_b",
    "check_lemma21_c",
    "check_lemma21_d",
    "check_lemma21_e",
    "check_lemma21_f",
    "check_rem25",
    "check_rem27",
    "check_thm22",
    "check_thm24",
    "emit_report",
    "eval_herglotz",
    "fbar_apply",
    "fbar_direct",
    "haar_unitary",
    "herm_part",
    "hermitian_eigen",
    "load_operator",
    "numerical_radius",
    "numradius_lower_bound",
    "random_g1",
    "random_herglotz",
    "render_report",
    "resolvent_norm",
    "riesz_dunford",
    "run_suite",
    "run_trial",
    "skew_part",
    "solve",
    "spectral_norm",
    "trial_seed",
]
