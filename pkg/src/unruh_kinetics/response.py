"""First-order detector response on inertial and accelerated worldlines.

The transition probability per unit (coupling)^2 x (matrix-element sum): zero
for inertial motion, Planckian for uniform acceleration.  Both closed forms
come with damped oscillatory-quadrature oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import DomainError, Inertial, Trajectory, UniformAcceleration
from .numerics import damped_line_integral, halving_ladder, neville

__all__ = [
    "ResponseResult",
    "response_inertial",
    "response_accelerated",
    "unruh_temperature",
    "inertial_silence_oracle",
    "planck_response_oracle",
]

_FOUR_PI_SQ = 4.0 * math.pi**2


@dataclass(frozen=True)
class ResponseResult:
    """Transition rate per unit mu^2 * sum of squared matrix elements."""

    rate: float
    deltaE: float
    trajectory: Trajectory

    def __post_init__(self) -> None:
        if self.rate < 0:
            raise DomainError(f"rate must be non-negative, got {self.rate}")


def _check_gap(deltaE: float) -> None:
    if not deltaE > 0:
        raise DomainError(f"deltaE must be positive, got {deltaE}")


def response_inertial(deltaE: float) -> ResponseResult:
    """Inertial detectors never excite: the rate is exactly zero."""
    _check_gap(deltaE)
    return ResponseResult(rate=0.0, deltaE=deltaE, trajectory=Inertial())


def response_accelerated(deltaE: float, alpha: float) -> ResponseResult:
    """Planck-distributed rate (1/2 pi) deltaE / (e^{2 pi deltaE / alpha} - 1)."""
    _check_gap(deltaE)
    if alpha <= 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    x = 2.0 * math.pi * deltaE / alpha
    rate = 0.0 if x > 700.0 else deltaE / (2.0 * math.pi * math.expm1(x))
    return ResponseResult(
        rate=rate, deltaE=deltaE, trajectory=UniformAcceleration(alpha)
    )


def unruh_temperature(alpha: float) -> float:
    """T = alpha / 2 pi in natural units."""
    if alpha <= 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    return alpha / (2.0 * math.pi)


def inertial_silence_oracle(
    deltaE: float, eps: float, u_max: float = 1.0e3
) -> float:
    """Damped-quadrature estimate of the inertial response at finite eps.

    -(1/4 pi^2) int e^{-i deltaE u} e^{-eps |u|} (u - i eps)^-2 du.
    The pole sits in the upper half-plane while the phase closes the contour
    below, so the value decays to zero with eps; the damping scale is slaved
    to eps, which keeps the estimate monotone in eps instead of bottoming out
    at the quadrature noise floor.
    """
    _check_gap(deltaE)
    return -damped_line_integral(deltaE, -eps, eps, u_max) / _FOUR_PI_SQ


def planck_response_oracle(
    deltaE: float,
    alpha: float,
    n_lo: int = -4,
    n_hi: int = 8,
    delta0: float = 1.0e-2,
    delta_steps: int = 4,
    eps_ladder: tuple[float, ...] = (1.0e-3, 5.0e-4, 2.5e-4),
    u_max: float = 1.0e3,
) -> float:
    """Sum-and-quadrature oracle for the accelerated Planck response.

    Each image term -(1/4 pi^2)(u + i c_n)^-2 with c_n = 2 pi n / alpha - 2 eps
    is integrated against e^{-i deltaE u} under an e^{-delta |u|} damping
    window; delta -> 0+ by a Neville ladder, then eps -> 0+ by a second ladder
    (a finite eps shifts every residue by the factor e^{2 deltaE eps}).
    """
    _check_gap(deltaE)
    if alpha <= 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    period = 2.0 * math.pi / alpha
    deltas = halving_ladder(delta0, delta_steps)

    def at_eps(eps: float) -> float:
        vals = []
        for d in deltas:
            total = sum(
                damped_line_integral(deltaE, period * n - 2.0 * eps, d, u_max)
                for n in range(n_lo, n_hi + 1)
            )
            vals.append(-total / _FOUR_PI_SQ)
        value, _ = neville(deltas, vals)
        return value

    eps_vals = [at_eps(e) for e in eps_ladder]
    value, _ = neville(list(eps_ladder), eps_vals)
    return value
