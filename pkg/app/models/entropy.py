# models/entropy.py

"""Von Neumann entropies of the reduced states, in nats.

The atom uses the closed 2×2 eigenvalue formula. The field uses a cyclic
Jacobi eigensolver, normally on the small Gram matrix factors†·factors
(at most 4×4) and, for cross-checks, on the dense reduced matrix.
"""

import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from app.models.reduced_states import AtomState, FieldDensity
from utils.constants import (
    EIG_FLOOR,
    JACOBI_MAX_SWEEPS,
    JACOBI_TOLERANCE,
    NEGATIVE_EIG_TOLERANCE,
    QUBIT_CLAMP_TOLERANCE,
)
from utils.exceptions import DimensionError, DomainError, EigensolverError, PositivityError

HERMITIAN_TOLERANCE = 1e-12


@dataclass(frozen=True)
class EntropySample:
    scaled_t: float
    S_a: float
    S_f: float
    lambda_plus: float
    lambda_minus: float
    rho_ee: float = math.nan
    inversion: float = math.nan
    rho_eg_abs: float = math.nan
    S_total: float = 0.0

    @property
    def mutual_info(self) -> float:
        return mutual_information(self.S_a, self.S_f, self.S_total)


def von_neumann_entropy(eigenvalues: Sequence[float]) -> float:
    """−Σ λ ln λ over eigenvalues above the floor.

    Raises:
        PositivityError: If an eigenvalue is below −1e−9.
    """
    values = np.asarray(eigenvalues, dtype=float)
    if values.size and values.min() < -NEGATIVE_EIG_TOLERANCE:
        raise PositivityError(f"density matrix has eigenvalue {values.min():.3e}")
    kept = values[values > EIG_FLOOR]
    return float(-np.sum(kept * np.log(kept)))


def mutual_information(S_a: float, S_f: float, S_total: float) -> float:
    """Quantum mutual information S_a + S_f − S_total."""
    return S_a + S_f - S_total


def qubit_entropy(a: AtomState) -> Tuple[float, float, float]:
    """(S_a, λ₊, λ₋) with λ± = ½(1 ± √((2ρ_ee − 1)² + 4|ρ_eg|²)).

    Example:
        >>> qubit_entropy(AtomState(0.5, 0.5, 0j))[0] == math.log(2)
        True
    """
    radius_sq = (2.0 * a.rho_ee - 1.0) ** 2 + 4.0 * abs(a.rho_eg) ** 2
    if radius_sq > 1.0:
        if radius_sq - 1.0 >= QUBIT_CLAMP_TOLERANCE:
            raise PositivityError(f"atomic Bloch radius² {radius_sq} exceeds 1")
        radius_sq = 1.0
    radius = math.sqrt(radius_sq)
    lambda_plus = 0.5 * (1.0 + radius)
    lambda_minus = 0.5 * (1.0 - radius)
    return von_neumann_entropy([lambda_plus, lambda_minus]), lambda_plus, lambda_minus


def _rotate(A: np.ndarray, V: np.ndarray, p: int, q: int) -> None:
    """Zero A[p, q] in place with a complex Jacobi rotation of the (p, q) plane."""
    apq = A[p, q]
    g = abs(apq)
    app, aqq = A[p, p].real, A[q, q].real
    # A phase on column q makes the pivot real; the real rotation then follows
    theta = 0.5 * math.atan2(2.0 * g, aqq - app)
    c, s = math.cos(theta), math.sin(theta)
    phase = (apq / g).conjugate()
    G = np.array([[c, s], [-s * phase, c * phase]])

    cols = [p, q]
    A[:, cols] = A[:, cols] @ G
    A[cols, :] = G.conj().T @ A[cols, :]
    V[:, cols] = V[:, cols] @ G

    A[p, q] = A[q, p] = 0.0
    A[p, p] = A[p, p].real
    A[q, q] = A[q, q].real


def jacobi_eigensystem(M: np.ndarray) -> Tuple[np.ndarray, np.ndarray, int]:
    """Diagonalise a Hermitian matrix by cyclic Jacobi rotations.

    Args:
        M (np.ndarray): Square Hermitian matrix, real or complex.

    Returns:
        tuple: (eigenvalues, eigenvectors as columns, sweeps used), unsorted.

    Raises:
        DimensionError: If M is not square.
        DomainError: If M departs from Hermitian by more than 1e−12.
        EigensolverError: If the off-diagonal norm is still above
            1e−13·‖M‖ after 100 sweeps.
    """
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionError(f"matrix must be square, got shape {M.shape}")
    n = M.shape[0]
    scale = float(np.linalg.norm(M))
    if np.linalg.norm(M - M.conj().T) > HERMITIAN_TOLERANCE * max(1.0, scale):
        raise DomainError("matrix is not Hermitian")

    A = 0.5 * (M + M.conj().T).astype(complex)
    V = np.eye(n, dtype=complex)
    off_diagonal = ~np.eye(n, dtype=bool)

    for sweep in range(JACOBI_MAX_SWEEPS + 1):
        off = float(np.linalg.norm(A[off_diagonal]))
        if off <= JACOBI_TOLERANCE * scale:
            return A.diagonal().real.copy(), V, sweep
        if sweep == JACOBI_MAX_SWEEPS:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if A[p, q] != 0:
                    _rotate(A, V, p, q)

    raise EigensolverError(
        f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps (off-diagonal norm {off:.3e})"
    )


def hermitian_eigenvalues(M: np.ndarray) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix in descending order.

    Example:
        >>> hermitian_eigenvalues(np.array([[0.0, 1.0], [1.0, 0.0]]))
        array([ 1., -1.])
    """
    values, _, _ = jacobi_eigensystem(M)
    return np.sort(values)[::-1]


def field_entropy(f: FieldDensity, dense: bool = False) -> float:
    """S_f from the Gram matrix of the factors, or from the dense matrix when ``dense``."""
    matrix = f.dense if dense else f.gram()
    return von_neumann_entropy(hermitian_eigenvalues(matrix))
