"""Detector response: closed forms, limits, and quadrature oracles."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from unruh_kinetics.core import DomainError
from unruh_kinetics import response as RS


def test_inertial_rate_is_exactly_zero():
    assert RS.response_inertial(1.0).rate == 0.0
    assert RS.response_inertial(10.0).rate == 0.0


def test_inertial_rejects_non_positive_gap():
    with pytest.raises(DomainError):
        RS.response_inertial(0.0)


def test_accelerated_rate_at_log2_point():
    # e^{2 pi dE / alpha} = 2  =>  rate = dE / 2 pi
    alpha = 1.0
    de = alpha * math.log(2.0) / (2.0 * math.pi)
    assert RS.response_accelerated(de, alpha).rate == pytest.approx(
        de / (2.0 * math.pi), rel=1e-14
    )


def test_accelerated_rate_vanishes_at_small_alpha():
    assert RS.response_accelerated(1.0, 1e-3).rate == 0.0  # e^{6283} underflows
    assert RS.response_accelerated(1.0, 0.05).rate < 1e-50


def test_accelerated_rate_monotone_in_alpha():
    rates = [RS.response_accelerated(1.0, a).rate for a in np.linspace(0.2, 8.0, 30)]
    assert all(b > a for a, b in zip(rates, rates[1:]))


def test_small_gap_limit():
    # dE -> 0: rate -> alpha / 4 pi^2
    got = RS.response_accelerated(1e-8, 1.0).rate
    assert got == pytest.approx(1.0 / (4.0 * math.pi**2), rel=1e-6)


@given(
    st.floats(min_value=0.1, max_value=5.0),
    st.floats(min_value=0.2, max_value=5.0),
)
@settings(max_examples=30, deadline=None)
def test_kms_detailed_balance_shape(de, alpha):
    # absorption / emission = e^{-2 pi dE / alpha} as an algebraic identity
    x = 2.0 * math.pi * de / alpha
    absorption = RS.response_accelerated(de, alpha).rate
    emission = de / (2.0 * math.pi) * (1.0 + 1.0 / math.expm1(x))
    assert absorption / emission == pytest.approx(math.exp(-x), rel=1e-10)


def test_unruh_temperature():
    assert RS.unruh_temperature(2.0 * math.pi) == pytest.approx(1.0)
    assert RS.unruh_temperature(1.0) == pytest.approx(1.0 / (2.0 * math.pi))


def test_inertial_silence_oracle_decays():
    vals = [abs(RS.inertial_silence_oracle(1.0, 1e-3 / 2**k)) for k in range(4)]
    assert vals[0] < 1e-2
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_planck_oracle_matches_closed_form():
    oracle = RS.planck_response_oracle(1.0, 2.0)
    closed = RS.response_accelerated(1.0, 2.0).rate
    assert abs(oracle - closed) / closed < 1e-4
