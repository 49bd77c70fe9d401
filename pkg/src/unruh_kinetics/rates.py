"""Vacuum-fluctuation / radiation-reaction energy decomposition.

Closed-form atom-side rates under the symmetric operator ordering, the
ordering-independent total, numerically evaluated field-side rates, and the
derivative-coupling generalization in which the interaction carries n proper-
time derivatives of the field on each leg.

All numeric rates share one pipeline: analytic image-sum kernels at finite
regulator c = 2 eps, oscillatory quadrature over the half-line, and a Neville
ladder extrapolating eps -> 0+.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    AtomState,
    DetectorParams,
    DomainError,
    NonConvergence,
    OrderingParam,
    Regularization,
    SYMMETRIC_ORDERING,
)
from .kernels import image_sum_inverse_power
from .numerics import half_line_cos_sin_integral, neville

__all__ = [
    "EnergyRateReport",
    "planck_bracket",
    "atom_vf_rate",
    "atom_rr_rate",
    "atom_total_rate",
    "field_rates",
    "derivative_coupling_rates",
]

_FOUR_PI_SQ = 4.0 * math.pi**2

# Regulator ladder for the eps -> 0+ extrapolation of the rate integrals.
# Smaller ladders push the m = 6 kernels (~ c^-5 at the origin) into round-off
# territory; this one reaches ~1e-6 relative accuracy after Neville.
_EPS_LADDER = (1.6e-1, 8.0e-2, 4.0e-2, 2.0e-2, 1.0e-2)
# Relative contraction demanded of the ladder, scaled to the natural rate
# magnitude so near-zero results do not trip a spurious failure.
_CONTRACTION_TOL = 1.0e-3


@dataclass(frozen=True)
class EnergyRateReport:
    """VF/RR/total energy-variation rates.

    finite is False when the ordering makes VF and RR individually divergent
    (any lam != 1/2); vf and rr are then None while total remains valid.
    """

    total: float
    lam: OrderingParam
    finite: bool
    coupling_order: int = 0
    vf: float | None = None
    rr: float | None = None

    def __post_init__(self) -> None:
        if self.finite:
            if self.vf is None or self.rr is None:
                raise DomainError("finite report requires vf and rr values")
            if abs(self.vf + self.rr - self.total) > 1e-12 * max(
                1.0, abs(self.total)
            ):
                raise DomainError("vf + rr must reproduce total")
        elif self.vf is not None or self.rr is not None:
            raise DomainError("divergent ordering cannot carry vf/rr values")


def planck_bracket(omega0: float, alpha: float) -> float:
    """[1 + 2/(e^{2 pi omega0 / alpha} - 1)] = coth(pi omega0 / alpha); 1 at alpha=0."""
    if not omega0 > 0:
        raise DomainError(f"omega0 must be positive, got {omega0}")
    if alpha < 0:
        raise DomainError(f"alpha must be >= 0, got {alpha}")
    if alpha == 0.0:
        return 1.0
    x = 2.0 * math.pi * omega0 / alpha
    if x > 700.0:
        return 1.0
    return 1.0 + 2.0 / math.expm1(x)


def atom_vf_rate(params: DetectorParams, alpha: float, atom: AtomState) -> float:
    """Vacuum-fluctuation rate -(omega0^2 mu^2 / 8 pi) <R3> coth(pi omega0/alpha).

    Excites the ground state, de-excites the excited state; symmetric
    ordering assumed.
    """
    return (
        -(params.omega0**2 * params.mu**2 / (8.0 * math.pi))
        * atom.r3_expectation
        * planck_bracket(params.omega0, alpha)
    )


def atom_rr_rate(params: DetectorParams, alpha: float) -> float:
    """Radiation-reaction rate -(omega0^2 mu^2 / 16 pi) coth(pi omega0/alpha).

    Purely dissipative (always <= 0) and independent of the atom state.
    """
    return -(params.omega0**2 * params.mu**2 / (16.0 * math.pi)) * planck_bracket(
        params.omega0, alpha
    )


def atom_total_rate(
    params: DetectorParams,
    alpha: float,
    atom: AtomState,
    lam: OrderingParam = SYMMETRIC_ORDERING,
) -> EnergyRateReport:
    """Total energy rate -(omega0^2 mu^2 / 8 pi)[1/2 + <R3>] coth(pi omega0/alpha).

    The total carries no ordering dependence; the VF/RR split exists only for
    the symmetric ordering, so non-symmetric lam yields finite=False.
    """
    total = (
        -(params.omega0**2 * params.mu**2 / (8.0 * math.pi))
        * (0.5 + atom.r3_expectation)
        * planck_bracket(params.omega0, alpha)
    )
    if lam.is_symmetric:
        vf = atom_vf_rate(params, alpha, atom)
        rr = atom_rr_rate(params, alpha)
        # re-derive total from the split so the decomposition identity is
        # exact in floating point
        return EnergyRateReport(
            total=vf + rr, lam=lam, finite=True, vf=vf, rr=rr
        )
    return EnergyRateReport(total=total, lam=lam, finite=False)


# ---------------------------------------------------------------------------
# numeric pipeline
# ---------------------------------------------------------------------------

def _u_max(omega0: float, alpha: float) -> float:
    return min(60.0 / min(omega0, alpha), 400.0)


def _breakpoints(c: float) -> tuple[float, ...]:
    return (c / 10.0, c, 10.0 * c, 100.0 * c, 1.0, 5.0, 10.0, 30.0)


def _rate_integral(
    kernel, trig: str, omega0: float, alpha: float, c: float
) -> float:
    """int_0^{u_max} trig(omega0 u) kernel(u) du at fixed regulator c."""
    if trig == "cos":
        f = lambda u: math.cos(omega0 * u) * kernel(u)
    else:
        f = lambda u: math.sin(omega0 * u) * kernel(u)
    return half_line_cos_sin_integral(
        f, _u_max(omega0, alpha), _breakpoints(c)
    )


def _extrapolated(
    make_kernel, trig: str, omega0: float, alpha: float, scale: float
) -> float:
    """Neville-extrapolate the rate integral over the regulator ladder."""
    eps = list(_EPS_LADDER)
    vals = [
        _rate_integral(make_kernel(2.0 * e), trig, omega0, alpha, 2.0 * e)
        for e in eps
    ]
    value, contraction = neville(eps, vals)
    if contraction > _CONTRACTION_TOL * max(abs(value), scale):
        raise NonConvergence(
            f"regulator ladder contracted only to {contraction:.3e} "
            f"for a rate of magnitude {abs(value):.3e}"
        )
    return value


def field_rates(
    params: DetectorParams,
    alpha: float,
    atom: AtomState,
    reg: Regularization = Regularization(),
) -> tuple[float, float]:
    """(vf_field, rr_field): energy-variation rates on the field side.

    Cubic image-sum kernels S_3 integrated against sin / cos of the level
    splitting; eps -> 0+ by the shared Neville ladder.
    """
    if alpha <= 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    del reg  # regulator ladder is fixed internally; see _EPS_LADDER
    w0, mu = params.omega0, params.mu
    scale = w0**2 * mu**2 / (16.0 * math.pi)

    def vf_kernel(c: float):
        return lambda u: (
            (image_sum_inverse_power(3, u - 1j * c, alpha)
             + image_sum_inverse_power(3, u + 1j * c, alpha)).real
        )

    def rr_kernel(c: float):
        return lambda u: image_sum_inverse_power(3, u + 1j * c, alpha).imag

    vf = (
        (mu**2 / _FOUR_PI_SQ)
        * atom.r3_expectation
        * _extrapolated(vf_kernel, "sin", w0, alpha, scale)
    )
    rr = -(mu**2 / _FOUR_PI_SQ) * _extrapolated(
        rr_kernel, "cos", w0, alpha, scale
    )
    return vf, rr


def derivative_coupling_rates(
    params: DetectorParams,
    alpha: float,
    atom: AtomState,
    n: int = 0,
    reg: Regularization = Regularization(),
) -> EnergyRateReport:
    """Numeric VF/RR rates for the n-th derivative coupling, symmetric ordering.

    The n-fold proper-time derivatives act on each image term analytically:
    (u + ic)^-2 -> (-1)^n (2n+1)! (u + ic)^-(2n+2); the interaction carries a
    compensating omega0^-2n so all orders share the same dimensions.
    """
    if alpha <= 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    if n < 0:
        raise DomainError(f"coupling order must be >= 0, got {n}")
    del reg
    w0, mu = params.omega0, params.mu
    m = 2 * n + 2
    sign_fact = (-1.0) ** n * math.factorial(2 * n + 1)
    scale = w0**2 * mu**2 / (16.0 * math.pi)
    dim = mu**2 * w0 / w0 ** (2 * n)

    def corr_kernel(c: float):
        # n-th derivative of the symmetrized field correlation function
        return lambda u: (
            -(sign_fact / (8.0 * math.pi**2))
            * (image_sum_inverse_power(m, u - 1j * c, alpha)
               + image_sum_inverse_power(m, u + 1j * c, alpha)).real
        )

    def susc_kernel(c: float):
        # n-th derivative of the field susceptibility
        return lambda u: (
            (sign_fact / (4.0 * math.pi**2))
            * image_sum_inverse_power(m, u + 1j * c, alpha).imag
        )

    vf = -dim * atom.r3_expectation * _extrapolated(
        corr_kernel, "cos", w0, alpha, scale
    )
    rr = 0.5 * dim * _extrapolated(susc_kernel, "sin", w0, alpha, scale)
    return EnergyRateReport(
        total=vf + rr,
        lam=SYMMETRIC_ORDERING,
        finite=True,
        coupling_order=n,
        vf=vf,
        rr=rr,
    )
