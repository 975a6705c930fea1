# models/evolution.py

"""Closed-form time evolution of each field branch with the atom starting excited.

In the frame rotating with H₀ = ω a†a + (kω/2)σ_z, the doublet
{|n,e⟩, |n+k,g⟩} evolves under λ[δ₊(n) + ν̃_n σ_z + τ̃_n σ_x], so

    A_n(t) = q_n c_n e^{−iλtδ₊(n)} (cos λtμ̃_n − i ν̃_n sin λtμ̃_n / μ̃_n)
    B_n(t) = −i q_n c_n τ̃_n e^{−iλtδ₊(n)} sin λtμ̃_n / μ̃_n

with ν̃_n = δ/2 + δ₋(n), τ̃_n = τ_n/λ and μ̃_n² = ν̃_n² + τ̃_n². B_n multiplies
|n+k, g⟩. The coupling coefficient in B_n is τ̃_n; that is the only choice
that conserves |A_n|² + |B_n|² = |q_n c_n|².
"""

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from app.models.dressed_model import ModelParams, scaled_rabi_arrays
from app.models.fock_space import FieldBranch
from utils.exceptions import DimensionError, DomainError


@dataclass(frozen=True)
class BranchAmplitudes:
    weight: float
    A: np.ndarray = field(repr=False)
    B: np.ndarray = field(repr=False)
    t: float
    scaled_t: float

    @property
    def n_max(self) -> int:
        return self.A.shape[0] - 1

    @property
    def norm(self) -> float:
        return float(np.vdot(self.A, self.A).real + np.vdot(self.B, self.B).real)


@dataclass(frozen=True)
class JointBlocks:
    rho1: np.ndarray = field(repr=False)
    rho2: np.ndarray = field(repr=False)
    rho3: np.ndarray = field(repr=False)
    rho4: np.ndarray = field(repr=False)

    @property
    def trace(self) -> float:
        return float(np.trace(self.rho1).real + np.trace(self.rho4).real)


def branch_amplitudes(p: ModelParams, branch: FieldBranch, t: float) -> BranchAmplitudes:
    """Evaluate A_n(t), B_n(t) for one branch at physical time ``t``.

    Example:
        >>> amps = branch_amplitudes(params, prepared.branches[0], 0.0)
        >>> bool(np.all(amps.B == 0))
        True
    """
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    scaled_t = p.lam * t
    n = np.arange(branch.psi0.shape[0])
    nu_s, tau_s, mu_s, delta_plus = scaled_rabi_arrays(p, n)

    phase = np.exp(-1j * scaled_t * delta_plus)
    rabi = scaled_t * mu_s
    sinc = np.sin(rabi) / mu_s

    A = branch.psi0 * phase * (np.cos(rabi) - 1j * nu_s * sinc)
    B = -1j * branch.psi0 * tau_s * phase * sinc
    return BranchAmplitudes(weight=branch.weight, A=A, B=B, t=float(t), scaled_t=float(scaled_t))


def shifted_ground(B: np.ndarray, k: int) -> np.ndarray:
    """Ground-state amplitudes on the common Fock index: entry m holds B_{m−k}.

    Components with m − k < 0 are zero; the last k values of B fall outside the
    truncated field space.
    """
    shifted = np.zeros_like(B)
    if k < B.shape[0]:
        shifted[k:] = B[: B.shape[0] - k]
    return shifted


def check_common(branches: Sequence[BranchAmplitudes]) -> None:
    if not branches:
        raise DimensionError("at least one branch is required")
    dim = branches[0].A.shape
    t = branches[0].t
    for b in branches:
        if b.A.shape != dim or b.B.shape != dim:
            raise DimensionError(f"branch dimensions {b.A.shape}/{b.B.shape} differ from {dim}")
        if b.t != t:
            raise DimensionError(f"branches sampled at different times {b.t} and {t}")


def joint_blocks(branches: Sequence[BranchAmplitudes], k: int) -> JointBlocks:
    """Branch-weighted blocks ρ₁..ρ₄ of the joint density matrix.

    (ρ₁)_{nm} = A_nA_m*, (ρ₂)_{nm} = A_nB*_{m−k}, ρ₃ = ρ₂†,
    (ρ₄)_{nm} = B_{n−k}B*_{m−k}.
    """
    check_common(branches)
    dim = branches[0].A.shape[0]
    rho1 = np.zeros((dim, dim), dtype=complex)
    rho2 = np.zeros((dim, dim), dtype=complex)
    rho4 = np.zeros((dim, dim), dtype=complex)
    for b in branches:
        ground = shifted_ground(b.B, k)
        rho1 += b.weight * np.outer(b.A, b.A.conj())
        rho2 += b.weight * np.outer(b.A, ground.conj())
        rho4 += b.weight * np.outer(ground, ground.conj())
    return JointBlocks(rho1=rho1, rho2=rho2, rho3=rho2.conj().T, rho4=rho4)
