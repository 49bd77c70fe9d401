"""Two-level finite-temperature master equation.

Rate form, fixed-step RK4 evolution, closed-form populations, Fermi-Dirac
steady state and detailed balance.  The dynamics is a one-dimensional linear
relaxation with rate Gamma = (omega0 / 8 pi) coth(omega0 beta / 2) toward
sigma_plus(inf) = 1 / (1 + e^{omega0 beta}).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from scipy.special import expit

from .core import DomainError, StepSizeError

__all__ = [
    "PopulationState",
    "PopulationTrajectory",
    "rate_rhs",
    "evolve",
    "closed_form",
    "steady_state",
    "detailed_balance_ratio",
    "relaxation_rate",
]

# Global RK4 error for the default step count; the controller picks h so that
# Gamma * h stays below Z_DEFAULT, whose z^4/120 local-truncation envelope
# sits well under this.
EVOLVE_TOL = 1.0e-8
Z_DEFAULT = 0.01


@dataclass(frozen=True)
class PopulationState:
    """Diagonal reduced density matrix (sigma_plus, sigma_minus) of the atom."""

    sigma_plus: float
    sigma_minus: float

    def __post_init__(self) -> None:
        s = self.sigma_plus + self.sigma_minus
        if not math.isclose(s, 1.0, rel_tol=0.0, abs_tol=1e-9):
            raise DomainError(f"populations must sum to 1, got {s}")
        if self.sigma_plus < -1e-12 or self.sigma_minus < -1e-12:
            raise DomainError(
                f"populations must be non-negative, got "
                f"({self.sigma_plus}, {self.sigma_minus})"
            )


@dataclass(frozen=True)
class PopulationTrajectory:
    """Populations sampled on a strictly increasing proper-time grid."""

    taus: tuple[float, ...]
    states: tuple[PopulationState, ...]
    omega0: float
    beta: float
    max_defect: float = 0.0

    def __post_init__(self) -> None:
        if len(self.taus) != len(self.states):
            raise DomainError("grid and state list lengths differ")
        if any(b <= a for a, b in zip(self.taus, self.taus[1:])):
            raise DomainError("proper-time grid must be strictly increasing")

    @property
    def final(self) -> PopulationState:
        return self.states[-1]


def _check_params(omega0: float, beta: float) -> None:
    if not omega0 > 0:
        raise DomainError(f"omega0 must be positive, got {omega0}")
    if math.isnan(beta) or beta <= 0:
        raise DomainError(f"beta must be positive (or +inf), got {beta}")


def _thermal_weight(omega0: float, beta: float) -> float:
    """[1 - e^{-omega0 beta}]^-1; 1 at beta = +inf."""
    if math.isinf(beta):
        return 1.0
    return 1.0 / -math.expm1(-omega0 * beta)


def relaxation_rate(omega0: float, beta: float) -> float:
    """Gamma = (omega0 / 8 pi) coth(omega0 beta / 2); coth -> 1 at beta = +inf."""
    _check_params(omega0, beta)
    coth = 1.0 if math.isinf(beta) else 1.0 / math.tanh(0.5 * omega0 * beta)
    return omega0 * coth / (8.0 * math.pi)


def rate_rhs(
    state: PopulationState, omega0: float, beta: float
) -> tuple[float, float]:
    """(d sigma_plus / d tau, d sigma_minus / d tau); the pair sums to zero.

    d sigma_plus / d tau
        = -(omega0 / 8 pi) { sigma_minus
                             + [1 - e^{-omega0 beta}]^-1 (sigma_plus - sigma_minus) }
    """
    _check_params(omega0, beta)
    w = _thermal_weight(omega0, beta)
    d_plus = -(omega0 / (8.0 * math.pi)) * (
        state.sigma_minus + w * (state.sigma_plus - state.sigma_minus)
    )
    return d_plus, -d_plus


def steady_state(omega0: float, beta: float) -> PopulationState:
    """Fermi-Dirac pair (1/(1+e^{omega0 beta}), e^{omega0 beta}/(1+e^{omega0 beta}))."""
    _check_params(omega0, beta)
    sp = 0.0 if math.isinf(beta) else float(expit(-omega0 * beta))
    return PopulationState(sp, 1.0 - sp)


def detailed_balance_ratio(omega0: float, beta: float) -> float:
    """Steady-state ratio sigma_plus / sigma_minus = e^{-omega0 beta}."""
    _check_params(omega0, beta)
    if math.isinf(beta):
        return 0.0
    return math.exp(-omega0 * beta)


def closed_form(
    init: PopulationState, omega0: float, beta: float, tau: float
) -> PopulationState:
    """Exact populations: exponential relaxation onto the Fermi-Dirac pair."""
    _check_params(omega0, beta)
    if tau < 0:
        raise DomainError(f"tau must be non-negative, got {tau}")
    if tau == 0.0:
        return init
    sp_inf = steady_state(omega0, beta).sigma_plus
    decay = math.exp(-relaxation_rate(omega0, beta) * tau)
    sp = sp_inf + (init.sigma_plus - sp_inf) * decay
    return PopulationState(sp, 1.0 - sp)


def _default_steps(gamma: float, tau_end: float) -> int:
    return max(1, math.ceil(gamma * tau_end / Z_DEFAULT))


def evolve(
    init: PopulationState,
    omega0: float,
    beta: float,
    tau_end: float,
    steps: int | None = None,
) -> PopulationTrajectory:
    """Fixed-step RK4 integration of rate_rhs on [0, tau_end].

    The default step count caps Gamma * h at Z_DEFAULT so the accumulated RK4
    truncation error stays below EVOLVE_TOL.  An explicit step count that
    cannot meet EVOLVE_TOL raises StepSizeError.  The exact conservation law
    sigma_plus + sigma_minus = 1 is re-imposed after every step; the largest
    pre-normalization defect (pure round-off) is recorded on the trajectory.
    """
    _check_params(omega0, beta)
    if tau_end < 0:
        raise DomainError(f"tau_end must be non-negative, got {tau_end}")
    if tau_end == 0:
        return PopulationTrajectory((0.0,), (init,), omega0, beta)

    gamma = relaxation_rate(omega0, beta)
    if steps is None:
        steps = _default_steps(gamma, tau_end)
    elif steps < 1:
        raise DomainError(f"steps must be >= 1, got {steps}")
    else:
        z = gamma * tau_end / steps
        sp_inf = steady_state(omega0, beta).sigma_plus
        err_est = abs(init.sigma_plus - sp_inf) * z**4 / 120.0
        if err_est > EVOLVE_TOL:
            raise StepSizeError(
                f"{steps} steps give error estimate {err_est:.3e} "
                f"> tolerance {EVOLVE_TOL:.1e}; need >= "
                f"{_default_steps(gamma, tau_end)}"
            )

    h = tau_end / steps
    taus = [0.0]
    states = [init]
    sp = init.sigma_plus
    sm = init.sigma_minus
    max_defect = 0.0

    def f(p: float, m: float) -> float:
        w = _thermal_weight(omega0, beta)
        return -(omega0 / (8.0 * math.pi)) * (m + w * (p - m))

    for k in range(steps):
        k1 = f(sp, sm)
        k2 = f(sp + 0.5 * h * k1, sm - 0.5 * h * k1)
        k3 = f(sp + 0.5 * h * k2, sm - 0.5 * h * k2)
        k4 = f(sp + h * k3, sm - h * k3)
        dp = (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        sp, sm = sp + dp, sm - dp
        total = sp + sm
        max_defect = max(max_defect, abs(total - 1.0))
        sp, sm = sp / total, sm / total
        taus.append((k + 1) * h)
        states.append(PopulationState(sp, sm))

    return PopulationTrajectory(
        tuple(taus), tuple(states), omega0, beta, max_defect
    )
