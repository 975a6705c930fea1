# models/oracle.py

"""Brute-force reference propagator for the closed-form solution.

The truncated Hamiltonian H = ω a†a + (ω₀/2)σ_z + a†a(β₁|g⟩⟨g| + β₂|e⟩⟨e|)
+ λ(a†ᵏσ₋ + aᵏσ₊) is written out as a dense real-symmetric matrix in the basis
[(0,e), ..., (N,e), (0,g), ..., (N,g)] and exponentiated exactly through
``numpy.linalg.eigh``. None of the closed-form code paths (dressed
amplitudes, Jacobi solver) are reused here.
"""

import warnings
from dataclasses import dataclass, field
from typing import Sequence, Tuple

import numpy as np

from app.models.dressed_model import ModelParams, ladder_factor, stark_shifts
from app.models.entropy import EntropySample
from app.models.fock_space import FieldPrep, PreparedField, choose_truncation, coherent_amplitudes, prepare_field
from utils.constants import EIG_FLOOR, NEGATIVE_EIG_TOLERANCE, ORACLE_LEAKAGE_TOLERANCE, TAIL_TOLERANCE
from utils.exceptions import DomainError, EigensolverError, PositivityError, TruncationWarning


@dataclass(frozen=True)
class TruncatedHamiltonian:
    params: ModelParams
    n_max: int
    H: np.ndarray = field(repr=False)
    energies: np.ndarray = field(repr=False)
    modes: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return 2 * (self.n_max + 1)

    def excited(self, n: int) -> int:
        """Basis index of |n, e⟩."""
        return n

    def ground(self, n: int) -> int:
        """Basis index of |n, g⟩."""
        return self.n_max + 1 + n

    def basis(self):
        return [(n, "e") for n in range(self.n_max + 1)] + [(n, "g") for n in range(self.n_max + 1)]

    def propagator(self, t: float) -> np.ndarray:
        """U(t) = V e^{−iEt} V†."""
        return (self.modes * np.exp(-1j * self.energies * t)) @ self.modes.conj().T


def build_hamiltonian(p: ModelParams, n_max: int) -> TruncatedHamiltonian:
    """Assemble and diagonalise the truncated Hamiltonian.

    Raises:
        DomainError: If n_max < k.
        EigensolverError: If numpy's eigensolver fails.

    Example:
        >>> h = build_hamiltonian(ModelParams.build(k=2), 2)
        >>> round(h.H[h.excited(0), h.ground(2)], 12) == round(2 ** 0.5, 12)
        True
    """
    if n_max < p.k:
        raise DomainError(f"n_max={n_max} must be at least k={p.k}")
    beta1, beta2 = stark_shifts(p)
    n = np.arange(n_max + 1, dtype=float)
    size = n_max + 1

    H = np.zeros((2 * size, 2 * size))
    H[np.arange(size), np.arange(size)] = p.omega * n + 0.5 * p.omega0 + beta2 * n
    H[size + np.arange(size), size + np.arange(size)] = p.omega * n - 0.5 * p.omega0 + beta1 * n

    # ⟨n,e|aᵏσ₊|n+k,g⟩ = λ√((n+k)!/n!)
    coupled = np.arange(size - p.k)
    coupling = p.lam * ladder_factor(coupled, p.k)
    H[coupled, size + coupled + p.k] = coupling
    H[size + coupled + p.k, coupled] = coupling

    try:
        energies, modes = np.linalg.eigh(H)
    except np.linalg.LinAlgError as e:
        raise EigensolverError(f"oracle diagonalisation failed: {e}")
    return TruncatedHamiltonian(params=p, n_max=n_max, H=H, energies=energies, modes=modes)


def initial_state(h: TruncatedHamiltonian, field_state: PreparedField) -> np.ndarray:
    """Joint density matrix |e⟩⟨e| ⊗ ρ_f(0), field vectors zero-padded to the oracle size."""
    vectors = np.zeros((h.n_max + 1, len(field_state.branches)), dtype=complex)
    vectors[: field_state.n_max + 1] = field_state.vectors()[: h.n_max + 1]
    joint = np.zeros((h.dim, vectors.shape[1]), dtype=complex)
    joint[: h.n_max + 1] = vectors
    return joint @ joint.conj().T


def propagate(h: TruncatedHamiltonian, initial: np.ndarray, t: float) -> np.ndarray:
    """Evolve a joint state vector or density matrix to time ``t``.

    Vectors are returned as evolved vectors, matrices as U ρ U†.
    """
    U = h.propagator(t)
    if initial.ndim == 1:
        return U @ initial
    return U @ initial @ U.conj().T


def interaction_picture(h: TruncatedHamiltonian, state: np.ndarray, t: float) -> np.ndarray:
    """Undo exp(−iH₀t), H₀ = ω a†a + (kω/2)σ_z, the frame of the closed form."""
    p = h.params
    n = np.arange(h.n_max + 1, dtype=float)
    free = np.concatenate((p.omega * n + 0.5 * p.k * p.omega, p.omega * n - 0.5 * p.k * p.omega))
    rotation = np.exp(1j * free * t)
    if state.ndim == 1:
        return rotation * state
    return rotation[:, None] * state * rotation.conj()[None, :]


def oracle_amplitudes(h: TruncatedHamiltonian, psi0: np.ndarray, t: float) -> Tuple[np.ndarray, np.ndarray]:
    """(A_n, B_n) of one pure branch in the closed-form index convention.

    ``psi0`` is the branch Fock vector; the result has its length, with B_n
    the amplitude of |n+k, g⟩.
    """
    size = psi0.shape[0]
    k = h.params.k
    joint = np.zeros(h.dim, dtype=complex)
    joint[:size] = psi0
    psi = interaction_picture(h, propagate(h, joint, t), t)
    excited = psi[: h.n_max + 1]
    ground = psi[h.n_max + 1:]
    B = np.zeros(size, dtype=complex)
    available = min(size, h.n_max + 1 - k)
    B[:available] = ground[k: k + available]
    return excited[:size].copy(), B


def oracle_reduced_states(h: TruncatedHamiltonian, rho: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Direct partial traces (atom 2×2 in (e, g) order, field (N+1)²)."""
    size = h.n_max + 1
    blocks = rho.reshape(2, size, 2, size)
    atom = np.einsum("injn->ij", blocks)
    field_matrix = np.einsum("inim->nm", blocks)
    return atom, field_matrix


def _entropy(matrix: np.ndarray) -> float:
    values = np.linalg.eigvalsh(0.5 * (matrix + matrix.conj().T))
    if values.min() < -NEGATIVE_EIG_TOLERANCE:
        raise PositivityError(f"oracle reduced state has eigenvalue {values.min():.3e}")
    kept = values[values > EIG_FLOOR]
    return float(-np.sum(kept * np.log(kept)))


def edge_population(h: TruncatedHamiltonian, rho: np.ndarray) -> float:
    """Population on the top k Fock levels of either atomic sector."""
    diagonal = rho.diagonal().real
    k = h.params.k
    top = list(range(h.n_max + 1 - k, h.n_max + 1))
    return float(sum(diagonal[h.excited(n)] + diagonal[h.ground(n)] for n in top))


def oracle_entropies(
    p: ModelParams,
    prep: FieldPrep,
    t_grid: Sequence[float],
    tail_tol: float = TAIL_TOLERANCE,
) -> list:
    """Entropy samples straight from the full joint density matrix.

    ``t_grid`` is in units of λt/π. The oracle truncation is the production
    truncation plus 2k. A TruncationWarning is issued when more than 1e−10 of
    the population reaches the top k Fock levels.
    """
    n_max = choose_truncation(prep.alpha, p.k, tail_tol) + 2 * p.k
    field_state = prepare_field(prep, coherent_amplitudes(prep.alpha, n_max))
    h = build_hamiltonian(p, n_max)
    rho0 = initial_state(h, field_state)
    S_total = _entropy(field_state.density_matrix())

    samples = []
    warned = False
    for x in t_grid:
        t = float(x) * np.pi / p.lam
        rho = propagate(h, rho0, t)
        if not warned and edge_population(h, rho) > ORACLE_LEAKAGE_TOLERANCE:
            warnings.warn(
                f"oracle truncation n_max={n_max} leaks population at λt/π={x}",
                TruncationWarning,
            )
            warned = True
        atom, field_matrix = oracle_reduced_states(h, rho)
        atom_values = np.sort(np.linalg.eigvalsh(atom))[::-1]
        rho_ee = float(atom[0, 0].real)
        samples.append(
            EntropySample(
                scaled_t=float(x),
                S_a=_entropy(atom),
                S_f=_entropy(field_matrix),
                lambda_plus=float(atom_values[0]),
                lambda_minus=float(atom_values[1]),
                rho_ee=rho_ee,
                inversion=2.0 * rho_ee - 1.0,
                rho_eg_abs=float(abs(atom[0, 1])),
                S_total=S_total,
            )
        )
    return samples
