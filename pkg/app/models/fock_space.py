# models/fock_space.py

"""Truncated Fock-basis amplitudes for coherent, cat and mixed initial fields.

Coherent amplitudes follow q_n = exp(-α²/2) αⁿ/√(n!) and are always built by
the multiplicative recurrence q_{n+1} = q_n α/√(n+1); factorials overflow
near n = 170 in double precision.

A statistical mixture ½(|α⟩⟨α| + |−α⟩⟨−α|) is carried as two pure branches of
weight ½ that never interfere, so every downstream module only ever evolves
pure vectors and averages at the end.
"""

import math
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from utils.constants import NORM_TOLERANCE, TAIL_TOLERANCE, TRUNCATION_CAP
from utils.exceptions import DegenerateStateError, DomainError, TruncationError

SUPERPOSITION = "superposition"
MIXTURE = "mixture"


def _frozen(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


@dataclass(frozen=True)
class FieldPrep:
    """Initial field description: ``superposition(r, α)`` or ``mixture(α)``."""

    kind: str
    alpha: float
    r: float = 0.0

    @classmethod
    def superposition(cls, r: float, alpha: float) -> "FieldPrep":
        return cls(kind=SUPERPOSITION, alpha=float(alpha), r=float(r))

    @classmethod
    def mixture(cls, alpha: float) -> "FieldPrep":
        return cls(kind=MIXTURE, alpha=float(alpha))

    @property
    def is_pure(self) -> bool:
        return self.kind == SUPERPOSITION


@dataclass(frozen=True)
class CoherentAmplitudes:
    alpha: float
    n_max: int
    q: np.ndarray = field(repr=False)

    @property
    def truncated_weight(self) -> float:
        """Σ q_n² over the kept Fock levels."""
        return float(np.dot(self.q, self.q))

    @property
    def mean_photon_number(self) -> float:
        return float(np.dot(np.arange(self.n_max + 1), self.q**2))


@dataclass(frozen=True)
class FieldBranch:
    """One pure trajectory of the initial field.

    ``c`` multiplies the coherent amplitudes and ``psi0 = q·c`` is the branch
    Fock vector, unit norm after truncation correction.
    """

    weight: float
    c: np.ndarray = field(repr=False)
    psi0: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class PreparedField:
    prep: FieldPrep
    q: CoherentAmplitudes
    branches: Tuple[FieldBranch, ...]

    @property
    def n_max(self) -> int:
        return self.q.n_max

    def vectors(self) -> np.ndarray:
        """Columns √w·psi0, one per branch."""
        return np.column_stack([np.sqrt(b.weight) * b.psi0 for b in self.branches])

    def density_matrix(self) -> np.ndarray:
        v = self.vectors()
        return v @ v.conj().T


def coherent_amplitudes(alpha: float, n_max: int) -> CoherentAmplitudes:
    """Build the truncated coherent-state amplitudes q_0..q_{n_max}.

    Args:
        alpha (float): Real, non-negative field amplitude.
        n_max (int): Highest kept Fock level.

    Returns:
        CoherentAmplitudes: Amplitudes computed by stable recurrence.

    Raises:
        DomainError: If alpha < 0 or n_max < 0.

    Example:
        >>> coherent_amplitudes(0.0, 4).q
        array([1., 0., 0., 0., 0.])
    """
    if alpha < 0:
        raise DomainError(f"alpha must be non-negative, got {alpha}")
    if n_max < 0:
        raise DomainError(f"n_max must be non-negative, got {n_max}")

    q = np.empty(n_max + 1)
    q[0] = np.exp(-0.5 * alpha * alpha)
    for n in range(n_max):
        q[n + 1] = q[n] * alpha / np.sqrt(n + 1)
    return CoherentAmplitudes(alpha=float(alpha), n_max=int(n_max), q=_frozen(q))


def _poisson_log_weights(alpha: float, length: int) -> np.ndarray:
    n = np.arange(length)
    log_factorial = np.concatenate(([0.0], np.cumsum(np.log(np.arange(1, length)))))
    if alpha == 0:
        weights = np.full(length, -np.inf)
        weights[0] = 0.0
        return weights
    return -alpha * alpha + 2.0 * n * np.log(alpha) - log_factorial


def choose_truncation(alpha: float, k: int, tail_tol: float = TAIL_TOLERANCE) -> int:
    """Smallest N whose Poisson tail Σ_{n>N} q_n² is below ``tail_tol``, plus margin k.

    Raises:
        DomainError: If tail_tol is not positive.
        TruncationError: If the result would exceed the truncation cap.

    Example:
        >>> choose_truncation(0.0, 2)
        2
    """
    if tail_tol <= 0:
        raise DomainError(f"tail_tol must be positive, got {tail_tol}")
    # A mean photon number above the cap leaves about half the weight past it.
    if not math.isfinite(alpha) or alpha * alpha > TRUNCATION_CAP:
        raise TruncationError(
            f"alpha={alpha} puts the mean photon number above the cap of {TRUNCATION_CAP}"
        )

    # The sum is negligible well past mean + 40 standard deviations.
    length = int(max(TRUNCATION_CAP, alpha * alpha + 40.0 * alpha)) + 64
    weights = np.exp(_poisson_log_weights(alpha, length))
    # tails[N] = Σ_{n>N} q_n², summed from the far end for accuracy
    tails = np.concatenate((np.cumsum(weights[::-1])[::-1][1:], [0.0]))
    n_tail = int(np.argmax(tails < tail_tol))
    n_max = n_tail + k
    if n_max > TRUNCATION_CAP:
        raise TruncationError(
            f"alpha={alpha}, k={k}, tail_tol={tail_tol} needs n_max={n_max}, "
            f"above the cap of {TRUNCATION_CAP}"
        )
    return n_max


def cat_normalisation(r: float, alpha: float) -> float:
    """A = 1 + r² + 2r·exp(−2α²), written to stay accurate as A → 0."""
    return (1.0 + r) ** 2 + 2.0 * r * np.expm1(-2.0 * alpha * alpha)


def prepare_field(prep: FieldPrep, q: CoherentAmplitudes) -> PreparedField:
    """Decompose an initial field into weighted pure branches over ``q``.

    Superpositions give one branch with c_n = (1 + r(−1)ⁿ)/√A; the mixture
    gives two branches of weight ½ with c_n = 1 and c_n = (−1)ⁿ.

    Raises:
        DomainError: If r lies outside [−1, 1] or the prep kind is unknown.
        DegenerateStateError: If the superposition normalisation vanishes
            (r = −1 with α = 0).
    """
    parity = np.where(np.arange(q.n_max + 1) % 2 == 0, 1.0, -1.0)

    if prep.kind == SUPERPOSITION:
        if not -1.0 <= prep.r <= 1.0:
            raise DomainError(f"r must lie in [-1, 1], got {prep.r}")
        norm_a = cat_normalisation(prep.r, q.alpha)
        if norm_a <= 0.0:
            raise DegenerateStateError(
                f"superposition r={prep.r} of alpha={q.alpha} has zero norm"
            )
        raw = [(1.0, (1.0 + prep.r * parity) / np.sqrt(norm_a))]
    elif prep.kind == MIXTURE:
        raw = [(0.5, np.ones(q.n_max + 1)), (0.5, parity)]
    else:
        raise DomainError(f"unknown field preparation '{prep.kind}'")

    branches = []
    for weight, c in raw:
        psi0 = q.q * c
        norm = np.linalg.norm(psi0)
        if norm == 0.0:
            raise DegenerateStateError(
                f"{prep.kind} branch vanishes on Fock levels 0..{q.n_max}"
            )
        # Truncation correction keeps every branch exactly normalised.
        if abs(norm - 1.0) > NORM_TOLERANCE:
            c = c / norm
            psi0 = psi0 / norm
        branches.append(FieldBranch(weight=weight, c=_frozen(c), psi0=_frozen(psi0)))

    return PreparedField(prep=prep, q=q, branches=tuple(branches))
