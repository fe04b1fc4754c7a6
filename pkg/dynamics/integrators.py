from typing import Callable

import numpy

from .exceptions import NumericalError


def rk4_step(
    state,
    dt: float,
    evaluator: Callable[[numpy.ndarray], numpy.ndarray],
    t: float = 0.0,
) -> numpy.ndarray:
    """
    One classical Runge-Kutta step of a time-invariant system.

    Anything time-varying (the EV relief, the disturbance step) has to be
    latched by the caller before the step, so ``evaluator`` only sees the state.
    """
    if not dt > 0:
        raise ValueError(f"Step size must be > 0, got {dt}")
    y = numpy.asarray(state, dtype=float)

    k1 = _stage(evaluator, y, t)
    k2 = _stage(evaluator, y + 0.5 * dt * k1, t)
    k3 = _stage(evaluator, y + 0.5 * dt * k2, t)
    k4 = _stage(evaluator, y + dt * k3, t)

    updated = y + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
    if not numpy.all(numpy.isfinite(updated)):
        raise NumericalError("Integration diverged", step_time=t)
    return updated


def _stage(evaluator, y: numpy.ndarray, t: float) -> numpy.ndarray:
    try:
        rate = numpy.asarray(evaluator(y), dtype=float)
    except NumericalError as error:
        raise NumericalError("Integration diverged", step_time=t) from error
    if not numpy.all(numpy.isfinite(rate)):
        raise NumericalError("Integration diverged", step_time=t)
    return rate
