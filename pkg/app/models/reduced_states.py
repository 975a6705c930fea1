# models/reduced_states.py

"""Reduced atomic and field density matrices built from branch amplitudes."""

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from app.models.evolution import BranchAmplitudes, check_common, shifted_ground


@dataclass(frozen=True)
class AtomState:
    rho_ee: float
    rho_gg: float
    rho_eg: complex

    @property
    def rho_ge(self) -> complex:
        return self.rho_eg.conjugate()

    def matrix(self) -> np.ndarray:
        """The 2×2 matrix in the (e, g) basis."""
        return np.array([[self.rho_ee, self.rho_eg], [self.rho_ge, self.rho_gg]], dtype=complex)


@dataclass(frozen=True)
class FieldDensity:
    dense: np.ndarray = field(repr=False)
    factors: np.ndarray = field(repr=False)

    @property
    def trace(self) -> float:
        return float(np.trace(self.dense).real)

    def gram(self) -> np.ndarray:
        """factors†·factors, sharing the nonzero spectrum of ``dense``."""
        return self.factors.conj().T @ self.factors


def atom_reduced(branches: Sequence[BranchAmplitudes], k: int) -> AtomState:
    """Trace out the field.

    ρ_ee = Σ_b w_b Σ_n |A_n|² and ρ_eg = Σ_b w_b Σ_n A_n B*_{n−k}, pairing
    |n,e⟩ with |n,g⟩ at equal photon number. ρ_gg = 1 − ρ_ee.
    """
    check_common(branches)
    rho_ee = 0.0
    rho_eg = 0j
    for b in branches:
        rho_ee += b.weight * float(np.vdot(b.A, b.A).real)
        rho_eg += b.weight * complex(np.vdot(shifted_ground(b.B, k), b.A))
    return AtomState(rho_ee=rho_ee, rho_gg=1.0 - rho_ee, rho_eg=rho_eg)


def field_reduced(branches: Sequence[BranchAmplitudes], k: int) -> FieldDensity:
    """Trace out the atom: (ρ_f)_{nm} = Σ_b w_b (A_nA_m* + B_{n−k}B*_{m−k}).

    The factor matrix holds the columns √w·A and √w·B_{·−k} of every branch.
    """
    check_common(branches)
    columns = []
    for b in branches:
        scale = np.sqrt(b.weight)
        columns.append(scale * b.A)
        columns.append(scale * shifted_ground(b.B, k))
    factors = np.column_stack(columns)
    dense = factors @ factors.conj().T
    return FieldDensity(dense=dense, factors=factors)


def inversion(a: AtomState) -> float:
    """Atomic inversion ρ_ee − ρ_gg."""
    return a.rho_ee - a.rho_gg
