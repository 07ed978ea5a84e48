"""Dense symmetric/Hermitian eigensolver used as independent ground truth.

Everything here is deliberately decoupled from the closed-form and circulant
modules: this is the brute-force side of every dual-route check, so it must
not share formula code with the side it validates.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import NonSymmetricMatrixError, OrderCapError
from .spectrum import Spectrum, spectrum_from_values

__all__ = [
    "DEFAULT_DENSE_CAP",
    "dense_matrix_cap",
    "ensure_symmetric",
    "symmetric_eigenvalues",
    "oracle_spectrum",
]

DEFAULT_DENSE_CAP = 4000
SYMMETRY_TOL = 1e-9

_CAP_ENV = "KRON_SPECTRA_MAX_ORDER"


def dense_matrix_cap() -> int:
    """Dense-matrix order cap; overridable via KRON_SPECTRA_MAX_ORDER."""
    raw = os.environ.get(_CAP_ENV)
    if raw is None:
        return DEFAULT_DENSE_CAP
    try:
        cap = int(raw)
    except ValueError as err:
        raise OrderCapError(f"{_CAP_ENV} must be an integer, got {raw!r}") from err
    if cap <= 0:
        raise OrderCapError(f"{_CAP_ENV} must be positive, got {cap}")
    return cap


def ensure_symmetric(matrix: np.ndarray, tol: float = SYMMETRY_TOL) -> np.ndarray:
    """Validate a square symmetric (real) or Hermitian (complex) matrix."""
    a = np.asarray(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSymmetricMatrixError(f"expected a square matrix, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise NonSymmetricMatrixError("matrix has non-finite entries")
    deviation = float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0
    if deviation > tol:
        raise NonSymmetricMatrixError(
            f"symmetry deviation {deviation:.3e} exceeds tolerance {tol:.1e}"
        )
    return a


def symmetric_eigenvalues(matrix: np.ndarray, tol: float | None = None) -> np.ndarray:
    """All eigenvalues of a symmetric/Hermitian matrix, ascending.

    ``tol`` is the requested absolute accuracy; the default is
    1e-9 * max(1, spectral radius).  The backward-stable dense solve
    delivers a few ulps times the radius, so a request it cannot honor
    raises instead of silently under-delivering.  Deterministic for
    identical input: no randomized or timing-dependent steps.
    """
    a = ensure_symmetric(matrix, SYMMETRY_TOL)
    cap = dense_matrix_cap()
    if a.shape[0] > cap:
        raise OrderCapError(f"matrix order {a.shape[0]} exceeds dense cap {cap}")
    if a.shape[0] == 0:
        return np.zeros(0)
    values = np.sort(np.linalg.eigvalsh(a))
    radius = max(1.0, float(np.abs(values).max()))
    if tol is None:
        tol = 1e-9 * radius
    achieved = 64 * np.finfo(np.float64).eps * radius
    if achieved > tol:
        raise ValueError(
            f"requested accuracy {tol:.1e} below the achievable {achieved:.1e}"
        )
    return values


def oracle_spectrum(matrix: np.ndarray, group_tol: float = 1e-6) -> Spectrum:
    """Eigensolve then group: the standard oracle pipeline for one matrix."""
    return spectrum_from_values(symmetric_eigenvalues(matrix), group_tol)
