"""Two-point functions of the detector-field system.

Vacuum and thermal Wightman functions on inertial and uniformly accelerated
worldlines, the field/atom correlation and susceptibility functions, and the
master-equation kernel g(tau', tau'') in both frames.  Every closed form has
a brute-force truncated-image-sum companion used as an oracle.

Sign conventions follow the -1/(4 pi^2) normalization of the massless-field
Wightman function throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    AtomState,
    DomainError,
    Inertial,
    NonConvergence,
    Regularization,
    SingularInput,
    Trajectory,
    UniformAcceleration,
)
from .numerics import extrapolate_to_zero, halving_ladder, neville

__all__ = [
    "KernelValue",
    "wightman_vacuum_inertial",
    "wightman_vacuum_accelerated",
    "wightman_vacuum_accelerated_sum",
    "g_thermal_inertial",
    "g_thermal_inertial_sum",
    "g_thermal_accelerated",
    "correlation_field",
    "susceptibility_field",
    "correlation_atom",
    "susceptibility_atom",
    "bose_occupancy",
    "image_sum_inverse_power",
    "image_sum_inverse_power_sum",
    "thermal_image_sum",
    "thermal_image_closed",
]

# Below this speed the finite-v coth closed form loses ~all significant digits
# to cancellation; switch to the v -> 0 csch^2 limit.
V_CROSSOVER = 1e-6
# Below this acceleration the accelerated thermal kernel is evaluated through
# its inertial limit.
ALPHA_CROSSOVER = 1e-6

_FOUR_PI_SQ = 4.0 * math.pi**2


@dataclass(frozen=True)
class KernelValue:
    """Complex kernel value; regularized=True marks finite-eps evaluation."""

    value: complex
    regularized: bool = False

    @property
    def re(self) -> float:
        return self.value.real

    @property
    def im(self) -> float:
        return self.value.imag


def _check_nonsingular(u: float, eps: float) -> None:
    if u == 0.0 and eps == 0.0:
        raise SingularInput("kernel evaluated at u = 0 with eps = 0")


def _csch2(x: complex) -> complex:
    return 1.0 / np.sinh(x) ** 2


def _coth(x: float) -> float:
    return 1.0 / math.tanh(x)


# ---------------------------------------------------------------------------
# image sums over z + i*(2 pi / alpha) * k
# ---------------------------------------------------------------------------

def image_sum_inverse_power(m: int, z: complex, alpha: float) -> complex:
    """S_m(z) = sum_k (z + i 2 pi k / alpha)^-m in closed form, m = 2..6.

    Obtained by repeated differentiation of the m = 2 lattice identity
    S_2(z) = (alpha/2)^2 csch^2(alpha z / 2) via S_{m+1} = -S_m' / m.
    """
    h = alpha / 2.0
    s2 = _csch2(h * z)
    c = np.cosh(h * z) / np.sinh(h * z)
    if m == 2:
        return h**2 * s2
    if m == 3:
        return h**3 * s2 * c
    if m == 4:
        return (h**4 / 3.0) * s2 * (2.0 * c * c + s2)
    if m == 5:
        return (h**5 / 3.0) * c * s2 * (c * c + 2.0 * s2)
    if m == 6:
        return (h**6 / 15.0) * s2 * (2.0 * c**4 + 11.0 * c * c * s2 + 2.0 * s2 * s2)
    raise DomainError(f"image_sum_inverse_power supports m in 2..6, got {m}")


def image_sum_inverse_power_sum(
    m: int, z: complex, alpha: float, n_max: int = 10_000
) -> complex:
    """Brute-force symmetric truncation of S_m(z) with a midpoint tail estimate."""
    period = 2.0 * math.pi / alpha
    n = np.arange(-n_max, n_max + 1)
    total = np.sum((z + 1j * period * n) ** (-m))
    # Euler-Maclaurin midpoint tail: sum_{|n|>N} f(n) ~ int over |n|>N+1/2
    edge = period * (n_max + 0.5)
    tail = (1.0 / (m - 1)) * ((z + 1j * edge) ** (1 - m) - (z - 1j * edge) ** (1 - m)) / (1j * period)
    return complex(total + tail)


# ---------------------------------------------------------------------------
# vacuum Wightman functions
# ---------------------------------------------------------------------------

def wightman_vacuum_inertial(u: float, eps: float = 0.0) -> KernelValue:
    """-1 / (4 pi^2 (u - i eps)^2)."""
    _check_nonsingular(u, eps)
    return KernelValue(-1.0 / (_FOUR_PI_SQ * (u - 1j * eps) ** 2), regularized=eps > 0)


def wightman_vacuum_accelerated(
    u: float, alpha: float, eps: float = 0.0
) -> KernelValue:
    """Closed form -(alpha^2 / 16 pi^2) csch^2(alpha (u - 2 i eps) / 2)."""
    if alpha <= 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    _check_nonsingular(u, eps)
    z = u - 2j * eps
    return KernelValue(
        complex(-(1.0 / _FOUR_PI_SQ) * image_sum_inverse_power(2, z, alpha)),
        regularized=eps > 0,
    )


def wightman_vacuum_accelerated_sum(
    u: float, alpha: float, reg: Regularization = Regularization()
) -> KernelValue:
    """Truncated-image-sum oracle with eps -> 0+ extrapolation.

    Symmetric truncation at |n| <= n_max plus a midpoint tail estimate, then
    a Neville ladder over eps, eps/2, ...
    """
    if alpha <= 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    if u == 0.0:
        raise SingularInput("u = 0 is singular for the extrapolated sum")

    def at_eps(eps: float) -> complex:
        return -(1.0 / _FOUR_PI_SQ) * image_sum_inverse_power_sum(
            2, u - 2j * eps, alpha, reg.n_max
        )

    ladder = halving_ladder(reg.epsilon, reg.extrap_steps)
    vals = [at_eps(e) for e in ladder]
    re, _ = neville(ladder, [v.real for v in vals])
    im, _ = neville(ladder, [v.imag for v in vals])
    return KernelValue(complex(re, im), regularized=False)


# ---------------------------------------------------------------------------
# thermal kernels, inertial frame
# ---------------------------------------------------------------------------

def thermal_image_closed(u: float, beta: float) -> complex:
    """-(1 / 4 beta^2) csch^2(pi u / beta), the v -> 0 thermal kernel."""
    if u == 0.0:
        raise SingularInput("u = 0 is singular")
    return -(1.0 / (4.0 * beta**2)) * _csch2(np.pi * u / beta + 0j)


def thermal_image_sum(
    u: float, beta: float, reg: Regularization = Regularization()
) -> complex:
    """-(1/4 pi^2) sum_n [u - i beta (n + eps)]^-2, extrapolated to eps -> 0+.

    Oracle for thermal_image_closed through the lattice-sum identity
    sum_n (u - i beta n)^-2 = (pi^2 / beta^2) csch^2(pi u / beta).
    """
    if u == 0.0:
        raise SingularInput("u = 0 is singular")
    n = np.arange(-reg.n_max, reg.n_max + 1)

    def at_eps(eps: float) -> complex:
        total = np.sum((u - 1j * beta * (n + eps)) ** -2)
        edge_hi = beta * (reg.n_max + 0.5 + eps)
        edge_lo = beta * (reg.n_max + 0.5 - eps)
        tail = ((u + 1j * edge_lo) ** -1 - (u - 1j * edge_hi) ** -1) / (1j * beta)
        return complex(total + tail)

    ladder = halving_ladder(reg.epsilon, reg.extrap_steps)
    vals = [at_eps(e) for e in ladder]
    re, dre = neville(ladder, [v.real for v in vals])
    im, _ = neville(ladder, [v.imag for v in vals])
    value = complex(re, im)
    if dre > reg.quad_tol * max(abs(value), 1e-300):
        raise NonConvergence(
            f"eps ladder contracted to {dre:.3e}, above quad_tol {reg.quad_tol:.3e}"
        )
    return -(1.0 / _FOUR_PI_SQ) * value


def g_thermal_inertial(
    u: float, beta: float, v: float, reg: Regularization = Regularization()
) -> KernelValue:
    """Finite-v inertial thermal kernel (coth closed form).

    g = sqrt(1-v^2) [coth(gamma (v-1) pi u / beta) + coth(gamma (v+1) pi u / beta)]
        / (8 pi beta v u)

    For v below the cancellation crossover the v -> 0 limit
    -(1/4 beta^2) csch^2(pi u / beta) is returned instead.
    """
    if not 0.0 <= v < 1.0:
        raise DomainError(f"speed must satisfy 0 <= v < 1, got {v}")
    if not math.isfinite(beta) or beta <= 0:
        raise DomainError(f"beta must be positive and finite, got {beta}")
    if u == 0.0:
        raise SingularInput("u = 0 is singular")
    if v < V_CROSSOVER:
        return KernelValue(thermal_image_closed(u, beta), regularized=False)
    gamma = 1.0 / math.sqrt(1.0 - v * v)
    x = math.pi * u / beta
    val = (
        math.sqrt(1.0 - v * v)
        * (_coth(gamma * (v - 1.0) * x) + _coth(gamma * (v + 1.0) * x))
        / (8.0 * math.pi * beta * v * u)
    )
    return KernelValue(complex(val), regularized=False)


def g_thermal_inertial_sum(
    u: float, beta: float, v: float, reg: Regularization = Regularization()
) -> KernelValue:
    """Truncated-sum oracle for g_thermal_inertial.

    (1/4 pi^2) sum_n [i 2 beta (gamma-1) u (n+eps) - (u - i beta (n+eps))^2]^-1,
    symmetric truncation plus a partial-fraction tail, Neville in eps.
    """
    if not 0.0 <= v < 1.0:
        raise DomainError(f"speed must satisfy 0 <= v < 1, got {v}")
    if u == 0.0:
        raise SingularInput("u = 0 is singular")
    gamma = 1.0 / math.sqrt(1.0 - v * v)
    n = np.arange(-reg.n_max, reg.n_max + 1)
    # denominator = beta^2 m^2 + 2 i beta gamma u m - u^2 with m = n + eps,
    # roots m_pm = -i gamma u (1 -+ v) / beta
    m_p = -1j * gamma * u * (1.0 - v) / beta
    m_m = -1j * gamma * u * (1.0 + v) / beta

    def tail_antideriv(mm: float) -> complex:
        # int dm / (beta^2 (m - m_p)(m - m_m)) evaluated at m = mm .. sign handled
        return np.log((mm - m_p) / (mm - m_m)) / (beta**2 * (m_p - m_m))

    def at_eps(eps: float) -> complex:
        m = n + eps
        total = np.sum(1.0 / (beta**2 * (m - m_p) * (m - m_m)))
        hi = reg.n_max + 0.5 + eps
        lo = -(reg.n_max + 0.5) + eps
        tail = -tail_antideriv(hi) + tail_antideriv(lo)
        return complex(total + tail)

    ladder = halving_ladder(reg.epsilon, reg.extrap_steps)
    vals = [at_eps(e) for e in ladder]
    re, dre = neville(ladder, [x.real for x in vals])
    im, _ = neville(ladder, [x.imag for x in vals])
    value = complex(re, im) / _FOUR_PI_SQ
    if dre / _FOUR_PI_SQ > reg.quad_tol * max(abs(value), 1e-300):
        raise NonConvergence(
            f"eps ladder failed to contract below quad_tol={reg.quad_tol:.3e}"
        )
    return KernelValue(value, regularized=False)


# ---------------------------------------------------------------------------
# thermal kernel, accelerated frame
# ---------------------------------------------------------------------------

def g_thermal_accelerated(
    tau1: float,
    tau2: float,
    beta: float,
    alpha: float,
    reg: Regularization = Regularization(),
) -> KernelValue:
    """Accelerated-frame thermal kernel; depends on tau1 and tau2 separately.

    g = alpha [coth(pi (e^{a t1} - e^{a t2}) / (a beta))
               - coth(2 pi e^{-a (t1+t2)/2} sinh(a (t1-t2)/2) / (a beta))]
        / (8 pi beta [cosh(a t1) - cosh(a t2)])

    beta = +inf returns the zero-temperature csch^2 closed form; alpha below
    the crossover returns the inertial thermal kernel.
    """
    if alpha <= 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    if math.isnan(beta) or beta <= 0:
        raise DomainError(f"beta must be positive (or +inf), got {beta}")
    u = tau1 - tau2
    if u == 0.0:
        raise SingularInput("tau1 = tau2 is singular")
    if math.isinf(beta):
        return wightman_vacuum_accelerated(u, alpha)
    if alpha < ALPHA_CROSSOVER:
        return KernelValue(thermal_image_closed(u, beta), regularized=False)
    a = alpha
    arg1 = math.pi * (math.exp(a * tau1) - math.exp(a * tau2)) / (a * beta)
    arg2 = (
        2.0
        * math.pi
        * math.exp(-0.5 * a * (tau1 + tau2))
        * math.sinh(0.5 * a * u)
        / (a * beta)
    )
    den = 8.0 * math.pi * beta * (math.cosh(a * tau1) - math.cosh(a * tau2))
    val = a * (_coth(arg1) - _coth(arg2)) / den
    return KernelValue(complex(val), regularized=False)


# ---------------------------------------------------------------------------
# correlation / susceptibility functions
# ---------------------------------------------------------------------------

def _field_pair(
    m: int, u: float, trajectory: Trajectory, eps: float, n_max: int | None
) -> tuple[complex, complex]:
    """(S_m(u - 2 i eps), S_m(u + 2 i eps)) for the given worldline.

    Inertial worldlines keep only the n = 0 image; n_max selects the
    truncated-sum route instead of the closed form.
    """
    zm, zp = u - 2j * eps, u + 2j * eps
    if isinstance(trajectory, Inertial):
        return zm ** (-m), zp ** (-m)
    if isinstance(trajectory, UniformAcceleration):
        a = trajectory.alpha
        if n_max is None:
            return (
                image_sum_inverse_power(m, zm, a),
                image_sum_inverse_power(m, zp, a),
            )
        return (
            image_sum_inverse_power_sum(m, zm, a, n_max),
            image_sum_inverse_power_sum(m, zp, a, n_max),
        )
    raise DomainError(f"unknown trajectory variant: {trajectory!r}")


def correlation_field(
    tau1: float,
    tau2: float,
    trajectory: Trajectory,
    reg: Regularization = Regularization(),
    *,
    eps: float | None = None,
    use_sum: bool = False,
) -> KernelValue:
    """Symmetrized field two-point function C^F (anticommutator / 2).

    C^F = -(1/8 pi^2) sum_n [(du - 2 i eps + i 2 pi n / alpha)^-2
                             + (du + 2 i eps + i 2 pi n / alpha)^-2]
    """
    u = tau1 - tau2
    e = reg.epsilon if eps is None else eps
    _check_nonsingular(u, e)
    sm, sp = _field_pair(2, u, trajectory, e, reg.n_max if use_sum else None)
    return KernelValue(-(sm + sp) / (8.0 * math.pi**2), regularized=e > 0)


def susceptibility_field(
    tau1: float,
    tau2: float,
    trajectory: Trajectory,
    reg: Regularization = Regularization(),
    *,
    eps: float | None = None,
    use_sum: bool = False,
) -> KernelValue:
    """Field linear susceptibility chi^F (commutator / 2i); same sum with a minus."""
    u = tau1 - tau2
    e = reg.epsilon if eps is None else eps
    _check_nonsingular(u, e)
    sm, sp = _field_pair(2, u, trajectory, e, reg.n_max if use_sum else None)
    return KernelValue(-(sm - sp) / (8.0j * math.pi**2), regularized=e > 0)


def correlation_atom(u: float, atom: AtomState, omega0: float = 1.0) -> float:
    """C^A(u) = cos(omega0 u) / 4; independent of the atom state."""
    del atom
    return 0.25 * math.cos(omega0 * u)


def susceptibility_atom(u: float, atom: AtomState, omega0: float = 1.0) -> float:
    """chi^A(u) = sin(omega0 u) <a|R3|a> / 2."""
    return 0.5 * math.sin(omega0 * u) * atom.r3_expectation


def bose_occupancy(omega: float, beta: float) -> float:
    """Bose-Einstein occupancy [e^{beta omega} - 1]^-1; 0 at beta = +inf."""
    if omega <= 0:
        raise DomainError(f"omega must be positive, got {omega}")
    if math.isnan(beta) or beta <= 0:
        raise DomainError(f"beta must be positive (or +inf), got {beta}")
    if math.isinf(beta):
        return 0.0
    x = beta * omega
    if x > 700.0:
        return 0.0
    return 1.0 / math.expm1(x)
