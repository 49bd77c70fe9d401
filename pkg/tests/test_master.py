"""Two-level master equation: RK4 vs closed form, steady state, balance."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from unruh_kinetics.core import DomainError, StepSizeError
from unruh_kinetics import master as M


def test_rhs_components_are_exact_negatives():
    for sp in (0.0, 0.3, 1.0):
        d_plus, d_minus = M.rate_rhs(M.PopulationState(sp, 1.0 - sp), 1.0, 2.0)
        assert d_plus == -d_minus


def test_rhs_vanishes_at_steady_state():
    for w0, beta in [(0.5, 0.3), (1.0, 1.0), (2.0, 7.0)]:
        d_plus, d_minus = M.rate_rhs(M.steady_state(w0, beta), w0, beta)
        assert abs(d_plus) < 1e-14
        assert abs(d_minus) < 1e-14


def test_rhs_zero_temperature_spontaneous_decay():
    d_plus, _ = M.rate_rhs(M.PopulationState(1.0, 0.0), 1.0, math.inf)
    assert d_plus == pytest.approx(-1.0 / (8.0 * math.pi), rel=1e-14)


def test_steady_state_values():
    assert M.steady_state(1.0, math.log(3.0)).sigma_plus == pytest.approx(0.25)
    assert M.steady_state(1.0, math.log(3.0)).sigma_minus == pytest.approx(0.75)
    hot = M.steady_state(1.0, 1e-12)
    assert hot.sigma_plus == pytest.approx(0.5, abs=1e-9)
    cold = M.steady_state(1.0, math.inf)
    assert (cold.sigma_plus, cold.sigma_minus) == (0.0, 1.0)


def test_detailed_balance():
    assert M.detailed_balance_ratio(1.0, math.log(2.0)) == pytest.approx(0.5)
    for w0, beta in [(0.7, 0.4), (1.3, 2.1), (2.0, 5.0)]:
        st_ = M.steady_state(w0, beta)
        assert st_.sigma_plus / st_.sigma_minus == pytest.approx(
            M.detailed_balance_ratio(w0, beta), abs=1e-14
        )


def test_closed_form_boundary_values():
    init = M.PopulationState(0.8, 0.2)
    assert M.closed_form(init, 1.0, 1.0, 0.0) == init
    far = M.closed_form(init, 1.0, 1.0, 1e6)
    assert far.sigma_plus == pytest.approx(
        M.steady_state(1.0, 1.0).sigma_plus, abs=1e-14
    )


def test_closed_form_unit_decay_point():
    # tau chosen so the decay exponent is exactly -1
    init = M.PopulationState(1.0, 0.0)
    tau = 8.0 * math.pi * math.tanh(0.5)
    got = M.closed_form(init, 1.0, 1.0, tau)
    sp_inf = M.steady_state(1.0, 1.0).sigma_plus
    assert got.sigma_plus == pytest.approx(
        sp_inf + (1.0 - sp_inf) * math.exp(-1.0), rel=1e-13
    )
    num = M.evolve(init, 1.0, 1.0, tau).final
    assert num.sigma_plus == pytest.approx(got.sigma_plus, abs=1e-8)


def test_evolve_zero_span_returns_init():
    init = M.PopulationState(0.4, 0.6)
    traj = M.evolve(init, 1.0, 1.0, 0.0)
    assert traj.taus == (0.0,)
    assert traj.states == (init,)


def test_evolve_matches_closed_form_over_grid():
    init_sps = [0.0, 0.25, 0.5, 0.75, 1.0]
    for w0 in (0.5, 1.0, 2.0):
        for beta in (0.1, 1.0, 10.0):
            for sp in init_sps:
                init = M.PopulationState(sp, 1.0 - sp)
                traj = M.evolve(init, w0, beta, 25.0)
                worst = max(
                    abs(s.sigma_plus - M.closed_form(init, w0, beta, t).sigma_plus)
                    for t, s in zip(traj.taus, traj.states)
                )
                assert worst < 1e-8
                assert traj.max_defect < 1e-12


def test_evolve_conservation():
    traj = M.evolve(M.PopulationState(0.9, 0.1), 1.0, 0.5, 50.0)
    for s in traj.states:
        assert abs(s.sigma_plus + s.sigma_minus - 1.0) < 1e-12


def test_evolve_monotone_approach_to_steady_state():
    init = M.PopulationState(1.0, 0.0)
    traj = M.evolve(init, 1.0, 2.0, 40.0)
    target = M.steady_state(1.0, 2.0).sigma_plus
    dists = [abs(s.sigma_plus - target) for s in traj.states]
    assert all(b <= a + 1e-15 for a, b in zip(dists, dists[1:]))


def test_evolve_step_size_error():
    # far too few explicit steps for the requested tolerance
    with pytest.raises(StepSizeError):
        M.evolve(M.PopulationState(1.0, 0.0), 1.0, 0.01, 200.0, steps=5)


def test_population_state_invariants():
    with pytest.raises(DomainError):
        M.PopulationState(0.7, 0.7)
    with pytest.raises(DomainError):
        M.PopulationState(1.2, -0.2)


def test_figure_regimes():
    # high temperature: both levels equally filled (up to the O(omega0 beta)
    # offset of the exact steady state from 1/2)
    hot = M.evolve(M.PopulationState(0.01, 0.99), 1.0, 0.01, 500.0).final
    assert abs(hot.sigma_plus - M.steady_state(1.0, 0.01).sigma_plus) < 1e-4
    assert abs(hot.sigma_plus - 0.5) < 0.005
    # low temperature: ground level fills almost completely
    cold = M.evolve(M.PopulationState(0.9, 0.1), 1.0, 5.0, 400.0).final
    assert cold.sigma_minus == pytest.approx(
        math.exp(5.0) / (1.0 + math.exp(5.0)), abs=1e-6
    )
    assert cold.sigma_minus > 0.99


@given(
    st.floats(min_value=0.0, max_value=1.0),
    st.floats(min_value=0.3, max_value=3.0),
    st.floats(min_value=0.2, max_value=5.0),
)
@settings(max_examples=20, deadline=None)
def test_evolve_closed_form_agreement_random(sp, w0, beta):
    init = M.PopulationState(sp, 1.0 - sp)
    traj = M.evolve(init, w0, beta, 10.0)
    ref = M.closed_form(init, w0, beta, 10.0)
    assert traj.final.sigma_plus == pytest.approx(ref.sigma_plus, abs=1e-8)
