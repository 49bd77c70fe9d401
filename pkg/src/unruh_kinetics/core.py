"""Domain types, unit conventions and parameter validation.

Natural units (hbar = c = k_B = 1) are used throughout the package.
Inverse temperature beta = +inf is a first-class value encoding exact
zero temperature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


class DomainError(ValueError):
    """A parameter violates a model invariant."""


class SingularInput(DomainError):
    """A kernel was evaluated exactly on its singular locus (u = 0, eps = 0)."""


class NonConvergence(RuntimeError):
    """An extrapolation or truncated-sum sequence failed to contract."""


class StepSizeError(RuntimeError):
    """The requested integrator step count cannot meet the error tolerance."""


def _require_finite(name: str, x: float) -> None:
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x}")


@dataclass(frozen=True)
class DetectorParams:
    """Two-level detector: level splitting omega0 > 0 and monopole coupling mu >= 0."""

    omega0: float
    mu: float = 1.0

    def __post_init__(self) -> None:
        _require_finite("omega0", self.omega0)
        _require_finite("mu", self.mu)
        if self.omega0 <= 0:
            raise DomainError(f"omega0 must be positive, got {self.omega0}")
        if self.mu < 0:
            raise DomainError(f"mu must be non-negative, got {self.mu}")


@dataclass(frozen=True)
class ThermalState:
    """Reservoir at inverse temperature beta in (0, +inf]; beta = inf means T = 0."""

    beta: float

    def __post_init__(self) -> None:
        if math.isnan(self.beta) or self.beta <= 0:
            raise DomainError(f"beta must be positive (or +inf), got {self.beta}")

    @property
    def is_zero_temperature(self) -> bool:
        return math.isinf(self.beta)

    @property
    def temperature(self) -> float:
        return 0.0 if self.is_zero_temperature else 1.0 / self.beta


class Trajectory:
    """Marker base class for detector worldlines."""


@dataclass(frozen=True)
class Inertial(Trajectory):
    """Straight worldline at constant speed 0 <= v < 1."""

    v: float = 0.0

    def __post_init__(self) -> None:
        _require_finite("v", self.v)
        if not 0.0 <= self.v < 1.0:
            raise DomainError(f"speed must be < 1 and >= 0, got {self.v}")

    @property
    def gamma(self) -> float:
        return 1.0 / math.sqrt(1.0 - self.v * self.v)


@dataclass(frozen=True)
class UniformAcceleration(Trajectory):
    """Hyperbolic worldline x = cosh(alpha tau)/alpha, t = sinh(alpha tau)/alpha."""

    alpha: float

    def __post_init__(self) -> None:
        _require_finite("alpha", self.alpha)
        if self.alpha <= 0:
            raise DomainError(f"alpha must be positive, got {self.alpha}")


@dataclass(frozen=True)
class Regularization:
    """Numerical control knobs shared by the kernel and rate evaluators.

    epsilon      -- i*eps shift used before the eps -> 0+ extrapolation
    n_max        -- symmetric truncation bound of image sums, |n| <= n_max
    quad_tol     -- relative tolerance demanded of extrapolation contractions
    extrap_steps -- number of eps-halving steps in Richardson/Neville ladders
    """

    epsilon: float = 1e-6
    n_max: int = 10_000
    quad_tol: float = 1e-10
    extrap_steps: int = 4

    def __post_init__(self) -> None:
        _require_finite("epsilon", self.epsilon)
        if self.epsilon <= 0:
            raise DomainError(f"epsilon must be positive, got {self.epsilon}")
        if self.n_max < 1:
            raise DomainError(f"n_max must be >= 1, got {self.n_max}")
        if not 0.0 < self.quad_tol < 1.0:
            raise DomainError(f"quad_tol must lie in (0, 1), got {self.quad_tol}")
        if self.extrap_steps < 1:
            raise DomainError(f"extrap_steps must be >= 1, got {self.extrap_steps}")


@dataclass(frozen=True)
class OrderingParam:
    """Operator-ordering weight of lam*AB + (1-lam)*BA; lam = 1/2 is symmetric."""

    lam: float = 0.5

    def __post_init__(self) -> None:
        if not 0.0 <= self.lam <= 1.0:
            raise DomainError(f"ordering weight must lie in [0, 1], got {self.lam}")

    @property
    def is_symmetric(self) -> bool:
        return self.lam == 0.5


SYMMETRIC_ORDERING = OrderingParam(0.5)


@dataclass(frozen=True)
class AtomState:
    """Diagonal atom state, characterized by <a|R3|a> in [-1/2, 1/2]."""

    r3_expectation: float

    def __post_init__(self) -> None:
        if not abs(self.r3_expectation) <= 0.5:
            raise DomainError(
                f"|<R3>| must be <= 1/2, got {self.r3_expectation}"
            )

    @classmethod
    def plus(cls) -> "AtomState":
        """Excited state |+>."""
        return cls(0.5)

    @classmethod
    def minus(cls) -> "AtomState":
        """Ground state |->."""
        return cls(-0.5)

    @classmethod
    def superposition(cls, c_plus: complex, c_minus: complex) -> "AtomState":
        norm = abs(c_plus) ** 2 + abs(c_minus) ** 2
        if not math.isclose(norm, 1.0, rel_tol=0, abs_tol=1e-9):
            raise DomainError(f"amplitudes must be normalized, |c+|^2+|c-|^2 = {norm}")
        return cls((abs(c_plus) ** 2 - abs(c_minus) ** 2) / 2.0)


@dataclass(frozen=True)
class ValidatedConfig:
    """Bundle of cross-checked model parameters, safe to hand to any evaluator."""

    detector: DetectorParams
    thermal: ThermalState
    trajectory: Trajectory
    regularization: Regularization = field(default_factory=Regularization)


def validate(
    detector: DetectorParams,
    thermal: ThermalState,
    trajectory: Trajectory,
    regularization: Regularization | None = None,
) -> ValidatedConfig:
    """Check every invariant and return an immutable config.

    The dataclasses enforce their own invariants on construction, so any
    instance reaching this point is already consistent; this re-checks the
    cross-field constraints, normalizes the beta = +inf encoding and is
    idempotent on accepted inputs.
    """
    if regularization is None:
        regularization = Regularization()
    if not isinstance(trajectory, (Inertial, UniformAcceleration)):
        raise DomainError(f"unknown trajectory variant: {trajectory!r}")
    beta = thermal.beta
    if math.isinf(beta) and beta > 0:
        thermal = ThermalState(math.inf)
    return ValidatedConfig(detector, thermal, trajectory, regularization)
