import math

import numpy
import pytest

from dynamics.exceptions import NumericalError
from dynamics.integrators import rk4_step


def test_equilibrium_is_unchanged():
    # given
    state = numpy.zeros(3)

    # when
    updated = rk4_step(state, 0.37, lambda y: -2.0 * y)

    # then
    assert numpy.array_equal(updated, state)


def test_first_order_lag_step_response():
    # given
    time_constant = 1.0
    dt = time_constant / 100
    state = numpy.array([0.0])

    # when
    for k in range(100):
        state = rk4_step(state, dt, lambda y: (1.0 - y) / time_constant, t=k * dt)

    # then
    assert state[0] == pytest.approx(1 - math.exp(-1), abs=1e-7)


def test_constant_rate_is_integrated_exactly():
    # given
    state = numpy.array([1.5, -2.0])
    rate = numpy.array([0.25, -0.125])

    # when
    updated = rk4_step(state, 0.01, lambda y: rate)

    # then
    assert updated == pytest.approx(state + rate * 0.01, abs=1e-15)


def test_divergence_reports_step_time():
    # given
    state = numpy.array([1.0])

    # when
    with pytest.raises(NumericalError) as error:
        rk4_step(state, 0.01, lambda y: numpy.array([math.inf]), t=2.5)

    # then
    assert error.value.step_time == 2.5
    assert "t=2.5" in str(error.value)


def test_step_size_must_be_positive():
    # given
    # when
    # then
    with pytest.raises(ValueError):
        rk4_step(numpy.zeros(1), 0.0, lambda y: y)
