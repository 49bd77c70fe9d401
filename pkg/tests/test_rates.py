"""Energy-variation rates: closed forms, numeric pipeline, orderings.

Note: the radiation-reaction half of the numeric pipeline converges to the
acceleration-independent value -omega0^2 mu^2 / 16 pi, while the closed form
carries the thermal factor coth(pi omega0 / alpha).  The field susceptibility
(a commutator function) is supported on the light cone, so the numeric result
is structural, not a quadrature artifact; see notes on the known closed-form
discrepancy.  The affected comparisons live in the two tests whose names end
in _known_discrepancy and are expected to fail honestly.
"""

import math

import pytest
from hypothesis import given, settings, strategies as st

from unruh_kinetics.core import AtomState, DetectorParams, OrderingParam
from unruh_kinetics import rates as R

PLUS = AtomState.plus()
MINUS = AtomState.minus()


def test_planck_bracket_identity():
    for w0, a in [(1.0, 1.0), (2.0, 0.5), (0.5, 3.0), (1.0, 10.0)]:
        assert R.planck_bracket(w0, a) == pytest.approx(
            1.0 / math.tanh(math.pi * w0 / a), rel=1e-12
        )
    assert R.planck_bracket(1.0, 0.0) == 1.0


def test_vf_closed_form_inertial_limit():
    p = DetectorParams(1.0, 1.0)
    assert R.atom_vf_rate(p, 0.0, PLUS) == pytest.approx(-1.0 / (16.0 * math.pi))
    assert R.atom_vf_rate(p, 0.0, MINUS) == pytest.approx(1.0 / (16.0 * math.pi))


def test_vf_excites_ground_state():
    p = DetectorParams(1.0, 1.0)
    assert R.atom_vf_rate(p, 2.0, MINUS) > 0.0
    assert R.atom_vf_rate(p, 2.0, PLUS) < 0.0
    # equal-weight average over the two eigenstates vanishes
    avg = R.atom_vf_rate(p, 2.0, PLUS) + R.atom_vf_rate(p, 2.0, MINUS)
    assert avg == pytest.approx(0.0, abs=1e-18)


def test_rr_closed_form_values():
    p = DetectorParams(1.0, 1.0)
    assert R.atom_rr_rate(p, 0.0) == pytest.approx(-1.0 / (16.0 * math.pi))
    # e^{2 pi omega0 / alpha} = 2 makes the bracket equal 3
    alpha = 2.0 * math.pi / math.log(2.0)
    assert R.atom_rr_rate(p, alpha) == pytest.approx(-3.0 / (16.0 * math.pi))


def test_rr_always_dissipative_and_state_independent():
    for w0 in (0.5, 1.0, 2.0):
        for alpha in (0.1, 1.0, 10.0):
            p = DetectorParams(w0, 0.7)
            assert R.atom_rr_rate(p, alpha) < 0.0


def test_total_rate_decomposition():
    p = DetectorParams(1.3, 0.9)
    rep = R.atom_total_rate(p, 1.7, PLUS)
    assert rep.finite
    assert abs(rep.vf + rep.rr - rep.total) < 1e-12


def test_total_vanishes_in_ground_state():
    for alpha in (0.0, 0.5, 3.0):
        rep = R.atom_total_rate(DetectorParams(1.0), alpha, MINUS)
        assert rep.total == pytest.approx(0.0, abs=1e-18)


def test_total_inertial_excited_state():
    rep = R.atom_total_rate(DetectorParams(1.0, 1.0), 0.0, PLUS)
    assert rep.total == pytest.approx(-1.0 / (8.0 * math.pi))


def test_nonsymmetric_ordering_flags_divergence():
    p = DetectorParams(1.0)
    sym = R.atom_total_rate(p, 1.0, PLUS)
    skew = R.atom_total_rate(p, 1.0, PLUS, OrderingParam(0.3))
    assert not skew.finite
    assert skew.vf is None and skew.rr is None
    assert skew.total == pytest.approx(sym.total, rel=1e-14)


@given(
    st.floats(min_value=0.0, max_value=1.0),
    st.floats(min_value=0.0, max_value=1.0),
)
@settings(max_examples=25, deadline=None)
def test_total_is_ordering_independent(lam1, lam2):
    p = DetectorParams(1.0)
    t1 = R.atom_total_rate(p, 2.0, PLUS, OrderingParam(lam1)).total
    t2 = R.atom_total_rate(p, 2.0, PLUS, OrderingParam(lam2)).total
    assert t1 == t2


def test_mu_squared_scaling():
    a = R.atom_total_rate(DetectorParams(1.0, 1.0), 1.0, PLUS).total
    b = R.atom_total_rate(DetectorParams(1.0, 2.0), 1.0, PLUS).total
    assert b == pytest.approx(4.0 * a, rel=1e-14)


# --- numeric pipeline -----------------------------------------------------

def test_derivative_coupling_n0_vf_matches_closed_form():
    p = DetectorParams(1.0, 1.0)
    rep = R.derivative_coupling_rates(p, 1.0, PLUS, n=0)
    want = R.atom_vf_rate(p, 1.0, PLUS)
    assert abs(rep.vf - want) / abs(want) < 1e-4


def test_derivative_coupling_n0_rr_known_discrepancy():
    # The numeric susceptibility integral evaluates to the vacuum value
    # -omega0^2 mu^2/16 pi with no thermal factor; the printed closed form
    # disagrees.  Kept as an honest failure; see the decision ledger.
    p = DetectorParams(1.0, 1.0)
    rep = R.derivative_coupling_rates(p, 1.0, PLUS, n=0)
    want = R.atom_rr_rate(p, 1.0)
    assert abs(rep.rr - want) / abs(want) < 1e-4, (
        f"numeric rr={rep.rr:.9e} vs closed rr={want:.9e}: the numeric value "
        f"equals the acceleration-independent -1/16pi * omega0^2 mu^2 = "
        f"{-p.omega0**2 * p.mu**2 / (16 * math.pi):.9e}"
    )


def test_derivative_coupling_order_invariance():
    p = DetectorParams(1.0, 1.0)
    base = R.derivative_coupling_rates(p, 1.0, PLUS, n=0)
    for n in (1, 2):
        rep = R.derivative_coupling_rates(p, 1.0, PLUS, n=n)
        assert abs(rep.vf - base.vf) / abs(base.vf) < 1e-3
        assert abs(rep.rr - base.rr) / abs(base.rr) < 1e-3


def test_field_vf_balances_atom_vf():
    p = DetectorParams(1.0, 1.0)
    vf_f, _ = R.field_rates(p, 1.0, PLUS)
    assert abs(abs(vf_f) - abs(R.atom_vf_rate(p, 1.0, PLUS))) / abs(
        R.atom_vf_rate(p, 1.0, PLUS)
    ) < 1e-4


def test_field_rr_balance_known_discrepancy():
    # Same structural issue as the atom-side rr comparison above: the field
    # commutator integral is acceleration-independent while the closed form
    # carries coth(pi omega0/alpha).  Honest failure; see the decision ledger.
    p = DetectorParams(1.0, 1.0)
    _, rr_f = R.field_rates(p, 1.0, PLUS)
    want = R.atom_rr_rate(p, 1.0)
    assert abs(abs(rr_f) - abs(want)) / abs(want) < 1e-4, (
        f"|field rr|={abs(rr_f):.9e} vs |atom rr|={abs(want):.9e}"
    )


def test_field_rates_inertial_limit():
    # alpha -> 0: both magnitudes approach omega0^2 mu^2 / 16 pi
    p = DetectorParams(1.0, 1.0)
    vf_f, rr_f = R.field_rates(p, 1e-3, PLUS)
    want = 1.0 / (16.0 * math.pi)
    assert abs(vf_f) == pytest.approx(want, rel=1e-3)
    assert abs(rr_f) == pytest.approx(want, rel=1e-3)
