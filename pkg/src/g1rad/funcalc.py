"""Herglotz-class functions on the unit disk and their matrix calculus.

A function here is a discrete probability measure on the circle,

    f(z) = sum_j w_j (e^{i a_j} + z) / (e^{i a_j} - z),

which is analytic on |z| < 1 with Re(f) > 0 and f(0) = 1. Matrix arguments
are handled by two independent routes: unitary diagonalization for normal
input, and trapezoidal quadrature of the Cauchy resolvent integral for
anything with spectrum inside the disk. The conjugate function acts as
fbar(A) = (f(A))*, with a direct kernel summation kept as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DimensionMismatch, DomainError, NotUnitary

WEIGHT_SUM_TOL = 1e-14
UNITARY_TOL = 1e-10
TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class HerglotzFunction:
    """Atomic boundary measure: angles in [0, 2pi) and weights summing to 1."""

    angles: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        angles = np.asarray(self.angles, dtype=np.float64).ravel()
        weights = np.asarray(self.weights, dtype=np.float64).ravel()
        if angles.size < 1 or angles.shape != weights.shape:
            raise ValueError("need k >= 1 atoms with matching angle/weight lists")
        if np.any(angles < 0.0) or np.any(angles >= TWO_PI):
            raise ValueError("angles must lie in [0, 2pi)")
        if np.any(weights < 0.0):
            raise ValueError("weights must be nonnegative")
        if abs(weights.sum() - 1.0) > WEIGHT_SUM_TOL:
            raise ValueError("weights must sum to 1")
        object.__setattr__(self, "angles", angles)
        object.__setattr__(self, "weights", weights)

    @property
    def atoms(self) -> int:
        return int(self.angles.size)


def _kernel_sum(f: HerglotzFunction, z):
    """Weighted Herglotz kernel sum, broadcast over an array of points."""
    z = np.asarray(z, dtype=np.complex128)
    e = np.exp(1j * f.angles)
    return np.sum(f.weights * (e + z[..., None]) / (e - z[..., None]), axis=-1)


def eval_herglotz(f: HerglotzFunction, z: complex) -> complex:
    """Evaluate f at a point strictly inside the unit disk."""
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError(f"|z| = {abs(z):.6f} is not inside the unit disk")
    return complex(_kernel_sum(f, z))


def random_herglotz(seed: int, atoms: int) -> HerglotzFunction:
    """Draw angles uniformly on [0, 2pi) and normalized positive weights."""
    if atoms < 1:
        raise ValueError("atoms must be at least 1")
    rng = np.random.default_rng(seed)
    angles = rng.uniform(0.0, TWO_PI, size=atoms)
    weights = rng.uniform(size=atoms)
    weights /= weights.sum()
    return HerglotzFunction(angles, weights)


def apply_normal(f: HerglotzFunction, unitary, lambdas) -> np.ndarray:
    """f(A) for normal A = U diag(lambda) U*, by scalar evaluation on the spectrum."""
    u = linalg.as_matrix(unitary)
    lam = np.asarray(lambdas, dtype=np.complex128).ravel()
    n = u.shape[0]
    if lam.size != n:
        raise DimensionMismatch(f"{lam.size} eigenvalues for a {n}x{n} unitary")
    if np.any(np.abs(lam) >= 1.0):
        raise DomainError("spectrum must lie strictly inside the unit disk")
    if np.linalg.norm(linalg.adjoint(u) @ u - np.eye(n)) > UNITARY_TOL:
        raise NotUnitary("diagonalizer is not unitary within tolerance")
    fvals = _kernel_sum(f, lam)
    return (u * fvals) @ linalg.adjoint(u)


def riesz_dunford(f: HerglotzFunction, a, spectrum, nodes: int = 512) -> np.ndarray:
    """f(A) by trapezoidal quadrature of (1/2pi i) int f(z) (z - A)^{-1} dz.

    The contour is the circle of radius (max|spectrum| + 1)/2, midway
    between the spectral radius and the unit circle; the trapezoid rule
    converges geometrically there since the integrand is analytic in an
    annulus around it.
    """
    a = linalg.as_matrix(a)
    spec = np.asarray(spectrum, dtype=np.complex128).ravel()
    if spec.size == 0:
        raise ValueError("spectrum must be non-empty")
    if nodes < 32:
        raise ValueError("nodes must be at least 32")
    rho = float(np.max(np.abs(spec)))
    if rho >= 1.0:
        raise DomainError("spectrum must lie strictly inside the unit disk")
    radius = 0.5 * (rho + 1.0)
    n = a.shape[0]
    z = radius * np.exp(2j * np.pi * np.arange(nodes) / nodes)
    fz = _kernel_sum(f, z)
    eye = np.eye(n, dtype=np.complex128)
    terms = np.empty((nodes, n, n), dtype=np.complex128)
    for m in range(nodes):
        terms[m] = (z[m] * fz[m]) * linalg.solve(z[m] * eye - a, eye)
    return terms.sum(axis=0) / nodes


def apply_direct(f: HerglotzFunction, a) -> np.ndarray:
    """Exact discrete-measure evaluation sum_j w_j (e^{i a_j} + A)(e^{i a_j} - A)^{-1}."""
    a = linalg.as_matrix(a)
    eye = np.eye(a.shape[0], dtype=np.complex128)
    out = np.zeros_like(a)
    for alpha, weight in zip(f.angles, f.weights):
        e = np.exp(1j * alpha)
        out = out + weight * linalg.solve(e * eye - a, e * eye + a)
    return out


def fbar_direct(f: HerglotzFunction, a) -> np.ndarray:
    """Conjugate-kernel summation sum_j w_j (e^{-i a_j} + A*)(e^{-i a_j} - A*)^{-1}."""
    adj = linalg.adjoint(linalg.as_matrix(a))
    eye = np.eye(adj.shape[0], dtype=np.complex128)
    out = np.zeros_like(adj)
    for alpha, weight in zip(f.angles, f.weights):
        e = np.exp(-1j * alpha)
        out = out + weight * linalg.solve(e * eye - adj, e * eye + adj)
    return out


def fbar_apply(f: HerglotzFunction, fa) -> np.ndarray:
    """fbar(A) from an already computed f(A), via fbar(A) = (f(A))*."""
    return linalg.adjoint(linalg.as_matrix(fa))
