import math

import pytest

from dynamics.exceptions import InvalidMixError, NumericalError
from dynamics.grid import (
    Disturbance,
    GovernorParams,
    GridState,
    derivatives,
    governor_output,
    turbine_output,
)
from dynamics.mix import CALIFORNIA_MIX, effective_inertia, to_per_unit


def test_equilibrium_has_zero_rates():
    # given
    state = GridState()

    # when
    rates = derivatives(state, GovernorParams(), 3.994, 0.0)

    # then
    assert rates == GridState(0.0, 0.0, 0.0)


def test_initial_rocof_after_generation_loss():
    # given
    h_eff = effective_inertia(CALIFORNIA_MIX)
    loss = to_per_unit(1800.0, CALIFORNIA_MIX)

    # when
    rates = derivatives(GridState(), GovernorParams(), h_eff, -loss)

    # then
    assert rates.delta_f == pytest.approx(-0.0113625, rel=1e-4)
    assert rates.delta_f * 60 == pytest.approx(-0.68175, rel=1e-4)
    assert rates.x_governor == 0.0
    assert rates.x_turbine == 0.0


def test_governor_follows_droop_demand():
    # given
    state = GridState(delta_f=-0.005)
    params = GovernorParams(droop_r=0.05, t_governor=0.2)

    # when
    rates = derivatives(state, params, 4.0, 0.0)

    # then
    assert rates.x_governor == pytest.approx(0.5)


def test_disabled_droop_freezes_the_governor():
    # given
    state = GridState(delta_f=-0.005)
    params = GovernorParams(droop_r=None)

    # when
    rates = derivatives(state, params, 4.0, -0.1)

    # then
    assert rates.x_governor == 0.0
    assert rates.x_turbine == 0.0
    assert rates.delta_f == pytest.approx(-0.1 / 8.0)


def test_zero_governor_lag_passes_droop_demand_through():
    # given
    state = GridState(delta_f=-0.005)
    params = GovernorParams(droop_r=0.05, t_governor=0.0, t_turbine=0.5)

    # when
    rates = derivatives(state, params, 4.0, 0.0)

    # then
    assert governor_output(state, params) == pytest.approx(0.1)
    assert rates.x_governor == 0.0
    assert rates.x_turbine == pytest.approx(0.2)


def test_zero_turbine_lag_feeds_governor_into_swing_equation():
    # given
    state = GridState(delta_f=0.0, x_governor=0.04)
    params = GovernorParams(t_turbine=0.0)

    # when
    rates = derivatives(state, params, 4.0, -0.04)

    # then
    assert turbine_output(state, params) == pytest.approx(0.04)
    assert rates.x_turbine == 0.0
    assert rates.delta_f == pytest.approx(0.0)


def test_damping_opposes_deviation():
    # given
    state = GridState(delta_f=-0.01)
    params = GovernorParams(droop_r=None, damping_d=1.0)

    # when
    rates = derivatives(state, params, 5.0, 0.0)

    # then
    assert rates.delta_f == pytest.approx(0.01 / 10.0)


@pytest.mark.parametrize(
    "state,net",
    [
        (GridState(delta_f=math.nan), 0.0),
        (GridState(x_turbine=math.inf), 0.0),
        (GridState(), math.nan),
    ],
)
def test_non_finite_input_is_a_numeric_error(state, net):
    # given
    # when
    # then
    with pytest.raises(NumericalError):
        derivatives(state, GovernorParams(), 4.0, net)


def test_non_positive_inertia_is_rejected():
    # given
    # when
    # then
    with pytest.raises(InvalidMixError):
        derivatives(GridState(), GovernorParams(), 0.0, -0.1)


@pytest.mark.parametrize(
    "params,field",
    [
        (GovernorParams(droop_r=0.0), "droop_r"),
        (GovernorParams(t_governor=-0.1), "t_governor"),
        (GovernorParams(t_turbine=-1.0), "t_turbine"),
        (GovernorParams(damping_d=-2.0), "damping_d"),
    ],
)
def test_governor_violations(params, field):
    # given
    # when
    violations = params.violations()

    # then
    assert len(violations) == 1
    assert violations[0].startswith(field)


def test_disturbance_is_a_step():
    # given
    disturbance = Disturbance(magnitude=1800.0, apply_time=1.0)

    # when
    # then
    assert disturbance.power_at(0.99) == 0.0
    assert disturbance.power_at(1.0) == 1800.0
    assert Disturbance(apply_time=-1.0).violations()


def test_state_array_round_trip():
    # given
    state = GridState(-0.001, 0.02, 0.03)

    # when
    # then
    assert GridState.from_array(state.as_array()) == state
