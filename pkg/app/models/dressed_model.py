# models/dressed_model.py

"""Dressed-state eigensystem of the k-quanta Hamiltonian with Stark shifts.

Stark convention: for stark_R > 0 the shifts are β₁ = λR and β₂ = λ/R, so
that R = √(β₁/β₂) and λ = √(β₁β₂). Under it
δ±(n) = [n ± R²(n+k)]/(2R) = (β₂n ± β₁(n+k))/(2λ) and ν_n/λ = δ/2 + δ₋(n).
stark_R = 0 means no Stark shift at all (β₁ = β₂ = 0, δ± = 0).
"""

import math
from dataclasses import dataclass, replace
from typing import Optional, Tuple

import numpy as np

from utils.exceptions import DomainError

CONSISTENCY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class ModelParams:
    lam: float = 1.0
    delta: float = 0.0
    k: int = 2
    stark_R: float = 0.0
    omega: float = 1.0
    omega0: float = 2.0

    @classmethod
    def build(
        cls,
        delta: float = 0.0,
        k: int = 2,
        stark_R: float = 0.0,
        lam: float = 1.0,
        omega: Optional[float] = None,
        omega0: Optional[float] = None,
    ) -> "ModelParams":
        """Create validated parameters, synthesising or checking ω and ω₀.

        With only ``delta`` given, ω = 1 and ω₀ = kω + λδ. When both
        frequencies are supplied they must satisfy Δ = ω₀ − kω = λδ.

        Raises:
            DomainError: On λ ≤ 0, k < 1, stark_R < 0, a lone frequency, or
                frequencies inconsistent with delta.

        Example:
            >>> ModelParams.build(delta=0.0, k=2).omega0
            2.0
        """
        if lam <= 0:
            raise DomainError(f"lambda must be positive, got {lam}")
        if int(k) != k or k < 1:
            raise DomainError(f"k must be an integer >= 1, got {k}")
        if stark_R < 0:
            raise DomainError(f"stark_R must be non-negative, got {stark_R}")

        if omega is None and omega0 is None:
            omega = 1.0
            omega0 = k * omega + lam * delta
        elif omega is None or omega0 is None:
            raise DomainError("omega and omega0 must be given together")
        else:
            detuning = omega0 - k * omega
            if abs(detuning - lam * delta) > CONSISTENCY_TOLERANCE * max(1.0, abs(omega0)):
                raise DomainError(
                    f"omega0 - k*omega = {detuning} does not match lambda*delta = {lam * delta}"
                )
        return cls(
            lam=float(lam),
            delta=float(delta),
            k=int(k),
            stark_R=float(stark_R),
            omega=float(omega),
            omega0=float(omega0),
        )

    @property
    def detuning(self) -> float:
        """Δ = λδ."""
        return self.lam * self.delta


@dataclass(frozen=True)
class RabiData:
    n: int
    nu: float
    tau: float
    mu: float
    nu_s: float
    tau_s: float
    mu_s: float
    delta_plus: float
    delta_minus: float
    theta: float


def stark_shifts(p: ModelParams) -> Tuple[float, float]:
    """(β₁, β₂) under the adopted convention, (0, 0) without Stark shift."""
    if p.stark_R == 0:
        return 0.0, 0.0
    return p.lam * p.stark_R, p.lam / p.stark_R


def effective_detuning(p: ModelParams) -> float:
    """Intensity-dependent detuning Δ_N = β₂ − β₁ created by the Stark shift."""
    beta1, beta2 = stark_shifts(p)
    return beta2 - beta1


def ladder_factor(n, k: int):
    """√((n+k)!/n!) as the product Π_{j=1..k} √(n+j); accepts arrays."""
    n = np.asarray(n, dtype=float)
    result = np.ones_like(n)
    for j in range(1, k + 1):
        result = result * np.sqrt(n + j)
    return result


def scaled_stark_phases(p: ModelParams, n):
    """(δ₊(n), δ₋(n)) for scalar or array n."""
    n = np.asarray(n, dtype=float)
    if p.stark_R == 0:
        zero = np.zeros_like(n)
        return zero, zero
    R = p.stark_R
    plus = (n + R * R * (n + p.k)) / (2.0 * R)
    minus = (n - R * R * (n + p.k)) / (2.0 * R)
    return plus, minus


def scaled_rabi_arrays(p: ModelParams, n):
    """Dimensionless (ν̃_n, τ̃_n, μ̃_n, δ₊(n)) over an array of Fock indices."""
    delta_plus, delta_minus = scaled_stark_phases(p, n)
    nu_s = 0.5 * p.delta + delta_minus
    tau_s = ladder_factor(n, p.k)
    mu_s = np.sqrt(nu_s * nu_s + tau_s * tau_s)
    return nu_s, tau_s, mu_s, delta_plus


def rabi_parameters(p: ModelParams, n: int) -> RabiData:
    """Rabi data ν_n, τ_n, μ_n, θ_n and δ±(n) of the n-th doublet.

    Example:
        >>> rd = rabi_parameters(ModelParams.build(delta=0.0, k=2), 0)
        >>> round(rd.mu, 6)
        1.414214
    """
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    nu_s, tau_s, mu_s, delta_plus = (float(x) for x in scaled_rabi_arrays(p, n))
    delta_minus = nu_s - 0.5 * p.delta
    rd = RabiData(
        n=int(n),
        nu=p.lam * nu_s,
        tau=p.lam * tau_s,
        mu=p.lam * mu_s,
        nu_s=nu_s,
        tau_s=tau_s,
        mu_s=mu_s,
        delta_plus=delta_plus,
        delta_minus=delta_minus,
        theta=0.0,
    )
    return replace(rd, theta=mixing_angle(rd))


def mixing_angle(rd: RabiData) -> float:
    """θ_n = asin(τ_n / √((ν_n − μ_n)² + τ_n²)), strictly inside (0, π/2)."""
    gap = rd.nu - rd.mu
    return math.asin(rd.tau / math.hypot(gap, rd.tau))


def dressed_states(p: ModelParams, n: int) -> np.ndarray:
    """Columns |Ψ₊⁽ⁿ⁾⟩, |Ψ₋⁽ⁿ⁾⟩ in the (|n,e⟩, |n+k,g⟩) basis."""
    theta = rabi_parameters(p, n).theta
    s, c = math.sin(theta), math.cos(theta)
    return np.array([[s, c], [c, -s]])


def eigenvalues(p: ModelParams, n: int) -> Tuple[float, float]:
    """E±(n) = ω(n + k/2) + ω₀/2 + [nβ₂ + β₁(n+k)]/2 ± μ_n.

    The ω₀/2 term is kept as written for the dressed energies; the matching
    2×2 block of the lab-frame Hamiltonian has eigenvalues E±(n) − ω₀/2.
    """
    beta1, beta2 = stark_shifts(p)
    mu = rabi_parameters(p, n).mu
    centre = p.omega * (n + 0.5 * p.k) + 0.5 * p.omega0 + 0.5 * (n * beta2 + beta1 * (n + p.k))
    return centre + mu, centre - mu


def ground_ladder_energy(p: ModelParams, s: int) -> float:
    """E₀ = sβ₁ − Δ/2 of the uncoupled states |s,g⟩, 0 ≤ s < k."""
    if not 0 <= s < p.k:
        raise DomainError(f"s must satisfy 0 <= s < k={p.k}, got {s}")
    beta1, _ = stark_shifts(p)
    return s * beta1 - 0.5 * p.detuning
