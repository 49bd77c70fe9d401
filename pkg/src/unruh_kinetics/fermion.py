"""Fermion oscillator in a fermionic heat bath.

Spontaneous (C) and thermally stimulated (T_F) transition rates for a
discrete bath spectrum under the coarse-graining window dt, the two-level
population dynamics they generate, the energy rate, and the Markov-Born
validity diagnostic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import expit

from .core import DomainError

__all__ = [
    "BathSpectrum",
    "FermionRates",
    "default_bath",
    "fermion_rates",
    "fermion_population_rhs",
    "fermion_energy_rate",
    "coarse_graining_diagnostic",
    "coarse_graining_valid",
]

# Below this value of |detuning * dt| the sinc-squared weight
# [1 - cos(x dt)] / (x^2 dt) is evaluated by its Taylor series.
RESONANT_THRESHOLD = 1.0e-4


@dataclass(frozen=True)
class BathSpectrum:
    """Discrete bath modes (omega_i, g_i) at inverse temperature beta."""

    modes: tuple[tuple[float, float], ...]
    beta: float

    def __post_init__(self) -> None:
        if len(self.modes) == 0:
            raise DomainError("bath spectrum must contain at least one mode")
        for w, g in self.modes:
            if not (math.isfinite(w) and w > 0):
                raise DomainError(f"mode frequency must be positive, got {w}")
            if not (math.isfinite(g) and g >= 0):
                raise DomainError(f"coupling must be finite and >= 0, got {g}")
        if math.isnan(self.beta) or self.beta <= 0:
            raise DomainError(f"beta must be positive (or +inf), got {self.beta}")


@dataclass(frozen=True)
class FermionRates:
    """Rates over the window dt: C (spontaneous) and T_F (stimulated)."""

    C: float
    T_F: float
    dt: float

    def __post_init__(self) -> None:
        if self.C < 0 or self.T_F < 0 or self.dt <= 0:
            raise DomainError(
                f"rates must be >= 0 and dt > 0, got "
                f"C={self.C}, T_F={self.T_F}, dt={self.dt}"
            )
        # Fermi blocking: every occupancy factor is <= 1/2
        if self.T_F > 0.5 * self.C * (1.0 + 1e-12) + 1e-300:
            raise DomainError(f"T_F={self.T_F} exceeds C/2={0.5 * self.C}")


def default_bath(omega0: float, beta: float, g: float = 0.1) -> BathSpectrum:
    """101 equally coupled modes spanning [0.5 omega0, 1.5 omega0]."""
    freqs = np.linspace(0.5 * omega0, 1.5 * omega0, 101)
    return BathSpectrum(tuple((float(w), g) for w in freqs), beta)


def _window_weight(detuning: float, dt: float) -> float:
    """[1 - cos(x dt)] / (x^2 dt) with the resonant limit dt/2 at x -> 0."""
    x = detuning * dt
    if abs(x) < RESONANT_THRESHOLD:
        return 0.5 * dt * (1.0 - x * x / 12.0)
    return (1.0 - math.cos(x)) / (detuning * detuning * dt)


def _fermi_occupancy(omega: float, beta: float) -> float:
    """[e^{beta omega} + 1]^-1; 0 at beta = +inf."""
    if math.isinf(beta):
        return 0.0
    return float(expit(-beta * omega))


def fermion_rates(
    spectrum: BathSpectrum, omega0: float, dt: float
) -> FermionRates:
    """C = 2 sum_i |g_i|^2 w(omega0 - omega_i, dt); T_F weights each term
    by the Fermi occupancy of the bath mode."""
    if not omega0 > 0:
        raise DomainError(f"omega0 must be positive, got {omega0}")
    if not dt > 0:
        raise DomainError(f"dt must be positive, got {dt}")
    c = 0.0
    tf = 0.0
    for w, g in spectrum.modes:
        term = 2.0 * g * g * _window_weight(omega0 - w, dt)
        c += term
        tf += term * _fermi_occupancy(w, spectrum.beta)
    return FermionRates(C=c, T_F=tf, dt=dt)


def fermion_population_rhs(
    diag: tuple[float, float], rates: FermionRates
) -> tuple[float, float]:
    """(d sigma_00 / dt, d sigma_11 / dt) for the two-level truncation.

    d sigma_11 / dt = -C sigma_11 + T_F sigma_00; the ground-level component
    is the exact negative, so probability is conserved.
    """
    if len(diag) != 2:
        raise DomainError(f"two-level populations required, got {len(diag)}")
    s0, s1 = diag
    if not math.isclose(s0 + s1, 1.0, rel_tol=0.0, abs_tol=1e-9):
        raise DomainError(f"populations must sum to 1, got {s0 + s1}")
    d1 = -rates.C * s1 + rates.T_F * s0
    return (-d1, d1)


def fermion_energy_rate(
    diag: tuple[float, float], rates: FermionRates, omega0: float
) -> float:
    """d<H_A>/dt = omega0 (-C sigma_11 + T_F sigma_00)."""
    _, d1 = fermion_population_rhs(diag, rates)
    return omega0 * d1


def coarse_graining_diagnostic(v_typ: float, tau_c: float) -> float:
    """Third-to-second-order ratio 2 v tau_c of the coarse-grained expansion."""
    if v_typ < 0 or tau_c < 0:
        raise DomainError("interaction strength and correlation time must be >= 0")
    return 2.0 * v_typ * tau_c


def coarse_graining_valid(v_typ: float, tau_c: float) -> bool:
    """Markov-Born validity: (v tau_c)^2 < 0.01."""
    ratio = coarse_graining_diagnostic(v_typ, tau_c) / 2.0
    return ratio * ratio < 0.01
