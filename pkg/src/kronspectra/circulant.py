"""Circulant and block-circulant eigenstructure.

A circulant circ(c_0, ..., c_{n-1}) is diagonalized by the n-th roots of
unity: eigenvalue j is sum_k c_k * rho_j^k with rho_j = exp(2*pi*i*j/n).
A real symmetric block circulant Circ(b_0, ..., b_{n-1}) with k x k blocks
reduces to n Hermitian k x k matrices

    H_j = b_0 + sum_{f=1}^{h-1} (b_f rho_j^f + b_f^T conj(rho_j)^f)
              + b_h * (-1)^j   (last term only when n = 2h is even),

whose eigenvalues, over all j, form exactly the spectrum of the big matrix.
All trig arguments are reduced modulo n before evaluation to keep the
closed forms numerically clean.
"""

from __future__ import annotations

import cmath
import math
from typing import Sequence

import numpy as np

from .errors import FamilyDomainError, NonSymmetricMatrixError
from .spectrum import Spectrum, spectrum_from_values

__all__ = [
    "apgp_sum",
    "circulant_eigenvalues",
    "circulant_combo_eigenvalues",
    "is_symmetric_circulant",
    "real_circulant_spectrum",
    "circulant_matrix",
    "block_circulant_reduce",
    "block_circulant_matrix",
    "block_spectrum_union",
    "cycle_adjacency_eigenvalues",
    "cycle_distance_row",
    "cycle_combo_eigenvalues",
    "cycle_combo_spectrum",
]

IMAG_TOL = 1e-9
HERMITIAN_TOL = 1e-9
_R_ONE_TOL = 1e-12


def apgp_sum(a: complex, d: complex, r: complex, n: int) -> complex:
    """Sum of the first n terms of (a + k*d) * r^k, k = 0..n-1.

    For r != 1 this is the closed form
        [a + (n-1)d] (r^n - 1)/(r - 1) - d/(r - 1) [(r^n - 1)/(r - 1) - n];
    within 1e-12 of r = 1 the direct arithmetic-series value is returned.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if abs(r - 1) <= _R_ONE_TOL:
        return n * a + d * n * (n - 1) / 2
    geo = (r ** n - 1) / (r - 1)
    return (a + (n - 1) * d) * geo - d / (r - 1) * (geo - n)


def _roots_of_unity_powers(n: int, j: int) -> np.ndarray:
    """rho_j^k for k = 0..n-1 with exponents reduced mod n."""
    ks = (j * np.arange(n)) % n
    angles = 2.0 * math.pi * ks / n
    return np.cos(angles) + 1j * np.sin(angles)


def circulant_eigenvalues(first_row: Sequence[complex]) -> np.ndarray:
    """Eigenvalues lambda_j = sum_k c_k rho_j^k, indexed j = 0..n-1."""
    c = np.asarray(first_row, dtype=complex)
    if c.ndim != 1 or c.size < 1:
        raise ValueError("first row must be a nonempty 1-d sequence")
    n = c.size
    return np.array([np.dot(c, _roots_of_unity_powers(n, j)) for j in range(n)])


def circulant_combo_eigenvalues(s: float, row_a: Sequence[complex],
                                t: float, row_b: Sequence[complex]) -> np.ndarray:
    """Eigenvalues of s*A + t*B for circulants A, B of equal order.

    Both are diagonalized by the same root-of-unity eigenvectors, so the
    combination acts eigenvalue-wise: s*lambda_j + t*mu_j.
    """
    a = np.asarray(row_a, dtype=complex)
    b = np.asarray(row_b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(f"order mismatch: {a.shape} vs {b.shape}")
    return s * circulant_eigenvalues(a) + t * circulant_eigenvalues(b)


def is_symmetric_circulant(first_row: Sequence[float], tol: float = 0.0) -> bool:
    """True iff c_k == c_{n-k} for all k >= 1 (the matrix is symmetric)."""
    c = np.asarray(first_row, dtype=float)
    n = c.size
    return all(abs(c[k] - c[(n - k) % n]) <= tol for k in range(1, n))


def real_circulant_spectrum(first_row: Sequence[float],
                            group_tol: float = 1e-6) -> Spectrum:
    """Spectrum of a symmetric circulant, with the imaginary parts checked.

    The eigenvalues of a symmetric circulant are real; residual imaginary
    parts above 1e-9 indicate a formula or input error and raise instead of
    being silently discarded.
    """
    if not is_symmetric_circulant(first_row):
        raise NonSymmetricMatrixError("first row is not symmetric (c_k != c_{n-k})")
    vals = circulant_eigenvalues(first_row)
    worst = float(np.max(np.abs(vals.imag))) if vals.size else 0.0
    if worst > IMAG_TOL:
        raise NonSymmetricMatrixError(
            f"imaginary residue {worst:.3e} exceeds {IMAG_TOL:.1e}"
        )
    return spectrum_from_values(vals.real, group_tol)


def circulant_matrix(first_row: Sequence[complex]) -> np.ndarray:
    """Dense matrix with each row the previous one shifted right."""
    c = np.asarray(first_row)
    n = c.size
    return np.array([[c[(j - i) % n] for j in range(n)] for i in range(n)])


# ---------------------------------------------------------------------------
# Block circulants
# ---------------------------------------------------------------------------

def _validate_block_circulant(blocks: Sequence[np.ndarray]) -> list[np.ndarray]:
    if len(blocks) < 1:
        raise ValueError("need at least one block")
    mats = [np.asarray(b, dtype=float) for b in blocks]
    k = mats[0].shape[0]
    for b in mats:
        if b.ndim != 2 or b.shape != (k, k):
            raise ValueError("all blocks must be square of equal order")
    n = len(mats)
    if np.max(np.abs(mats[0] - mats[0].T)) > HERMITIAN_TOL:
        raise NonSymmetricMatrixError("b_0 must be symmetric")
    for f in range(1, n):
        dev = float(np.max(np.abs(mats[f].T - mats[n - f])))
        if dev > HERMITIAN_TOL:
            raise NonSymmetricMatrixError(
                f"b_{f}^T != b_{n - f} (deviation {dev:.3e}); "
                "the assembled matrix would not be symmetric"
            )
    return mats


def block_circulant_reduce(blocks: Sequence[np.ndarray]) -> list[np.ndarray]:
    """Reduce a real symmetric block circulant to the Hermitian blocks H_j.

    The union of the eigenvalues of the returned H_j (j = 0..n-1) equals
    the spectrum of the assembled n*k x n*k matrix.  Each H_j is verified
    Hermitian to 1e-9 before being returned.
    """
    mats = _validate_block_circulant(blocks)
    n = len(mats)
    h = (n + 1) // 2 if n % 2 else n // 2
    out: list[np.ndarray] = []
    for j in range(n):
        hj = mats[0].astype(complex)
        for f in range(1, h):
            rho_f = cmath.exp(2j * math.pi * ((j * f) % n) / n)
            hj = hj + mats[f] * rho_f + mats[f].T * rho_f.conjugate()
        if n % 2 == 0:
            hj = hj + mats[h] * ((-1) ** j)
        dev = float(np.max(np.abs(hj - hj.conj().T)))
        if dev > HERMITIAN_TOL:
            raise NonSymmetricMatrixError(
                f"H_{j} failed the Hermitian check (deviation {dev:.3e})"
            )
        out.append(hj)
    return out


def block_circulant_matrix(blocks: Sequence[np.ndarray]) -> np.ndarray:
    """Assemble the dense n*k x n*k block circulant (for oracle checks)."""
    mats = [np.asarray(b, dtype=float) for b in blocks]
    n = len(mats)
    return np.block([[mats[(j - i) % n] for j in range(n)] for i in range(n)])


def block_spectrum_union(hs: Sequence[np.ndarray], tol: float = 1e-6) -> Spectrum:
    """Concatenate the eigenvalues of Hermitian blocks into one Spectrum."""
    values: list[float] = []
    for hj in hs:
        a = np.asarray(hj)
        dev = float(np.max(np.abs(a - a.conj().T)))
        if dev > HERMITIAN_TOL:
            raise NonSymmetricMatrixError(f"block not Hermitian (deviation {dev:.3e})")
        values.extend(np.linalg.eigvalsh(a))
    return spectrum_from_values(values, tol)


# ---------------------------------------------------------------------------
# Cycle graphs: closed forms for s*A + t*D
# ---------------------------------------------------------------------------

def cycle_adjacency_eigenvalues(n: int) -> np.ndarray:
    """Adjacency eigenvalues of C_n: 2*cos(2*pi*j/n), j = 0..n-1."""
    if n < 3:
        raise FamilyDomainError(f"cycle needs n >= 3, got {n}")
    return 2.0 * np.cos(2.0 * math.pi * (np.arange(n) % n) / n)


def cycle_distance_row(n: int) -> list[int]:
    """First row of the distance circulant of C_n.

    Even n: (0, 1, ..., n/2 - 1, n/2, n/2 - 1, ..., 1).
    Odd n:  (0, 1, ..., (n-1)/2, (n-1)/2, ..., 1).
    """
    if n < 3:
        raise FamilyDomainError(f"cycle needs n >= 3, got {n}")
    return [min(k, n - k) for k in range(n)]


def cycle_combo_eigenvalues(n: int, s: float, t: float) -> np.ndarray:
    """Eigenvalues of s*A(C_n) + t*D(C_n), indexed j = 0..n-1.

    Closed forms (arguments reduced: j runs 0..n-1):

    even n:  j = 0        -> 2s + (n^2/4) t
             j even, != 0 -> 2s cos(2 pi j / n)
             j odd        -> 2s cos(2 pi j / n) - t / sin^2(pi j / n)
    odd n:   j = 0        -> 2s + ((n^2 - 1)/4) t
             j even, != 0 -> 2s cos(2 pi j / n) - (t/4) / cos^2(pi j / 2n)
             j odd        -> 2s cos(2 pi j / n) - (t/4) / sin^2(pi j / 2n)

    The even-n / even-j entry carries no t term: the distance eigenvalue is
    exactly 0 there.
    """
    if n < 3:
        raise FamilyDomainError(f"cycle needs n >= 3, got {n}")
    out = np.empty(n)
    for j in range(n):
        cosj = 2.0 * s * math.cos(2.0 * math.pi * j / n)
        if j == 0:
            out[j] = 2.0 * s + (n * n / 4.0 if n % 2 == 0 else (n * n - 1) / 4.0) * t
        elif n % 2 == 0:
            if j % 2 == 0:
                out[j] = cosj
            else:
                out[j] = cosj - t / math.sin(math.pi * j / n) ** 2
        else:
            if j % 2 == 0:
                out[j] = cosj - (t / 4.0) / math.cos(math.pi * j / (2 * n)) ** 2
            else:
                out[j] = cosj - (t / 4.0) / math.sin(math.pi * j / (2 * n)) ** 2
    return out


def cycle_combo_spectrum(n: int, s: float, t: float,
                         group_tol: float = 1e-6) -> Spectrum:
    """Spectrum of s*A(C_n) + t*D(C_n) from the closed-form table."""
    return spectrum_from_values(cycle_combo_eigenvalues(n, s, t), group_tol)
