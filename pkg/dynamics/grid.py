"""
Per-unit single-machine-equivalent frequency dynamics.

The system is the swing equation closed by a droop governor and a turbine,
each modelled as a first-order lag::

    2H d(delta_f)/dt = p_turbine + p_net - D delta_f
    T_G d(x_governor)/dt = -delta_f / R - x_governor
    T_T d(x_turbine)/dt = x_governor - x_turbine

A lag whose time constant is zero passes its input straight through.
"""
import math
from dataclasses import dataclass

import numpy

from .exceptions import InvalidMixError, NumericalError


@dataclass(frozen=True)
class GovernorParams:
    # None disables the droop loop
    droop_r: float | None = 0.05
    t_governor: float = 0.2
    t_turbine: float = 0.5
    damping_d: float = 0.0

    @property
    def droop_enabled(self) -> bool:
        return self.droop_r is not None

    def violations(self) -> list[str]:
        errors = []
        if self.droop_enabled and not self.droop_r > 0:
            errors.append(f"droop_r must be > 0 when enabled, got {self.droop_r}")
        for field in ("t_governor", "t_turbine", "damping_d"):
            value = getattr(self, field)
            if not math.isfinite(value) or value < 0:
                errors.append(f"{field} must be >= 0, got {value}")
        return errors

    def to_dict(self) -> dict:
        return {
            "droop_r": self.droop_r if self.droop_enabled else "disabled",
            "t_governor": self.t_governor,
            "t_turbine": self.t_turbine,
            "damping_d": self.damping_d,
        }


@dataclass(frozen=True)
class GridState:
    delta_f: float = 0.0
    x_governor: float = 0.0
    x_turbine: float = 0.0

    def as_array(self) -> numpy.ndarray:
        return numpy.array([self.delta_f, self.x_governor, self.x_turbine])

    @classmethod
    def from_array(cls, values) -> "GridState":
        delta_f, x_governor, x_turbine = (float(value) for value in values)
        return cls(delta_f, x_governor, x_turbine)


@dataclass(frozen=True)
class Disturbance:
    # MW of generation lost, applied as a step
    magnitude: float = 1800.0
    apply_time: float = 0.0

    def violations(self) -> list[str]:
        errors = []
        if not math.isfinite(self.magnitude):
            errors.append(f"magnitude must be finite, got {self.magnitude}")
        if not math.isfinite(self.apply_time) or self.apply_time < 0:
            errors.append(f"apply_time must be >= 0, got {self.apply_time}")
        return errors

    def power_at(self, t: float) -> float:
        return self.magnitude if t >= self.apply_time else 0.0

    def to_dict(self) -> dict:
        return {"magnitude": self.magnitude, "apply_time": self.apply_time}


def governor_output(state: GridState, params: GovernorParams) -> float:
    if not params.droop_enabled:
        return 0.0
    if params.t_governor == 0:
        return -state.delta_f / params.droop_r
    return state.x_governor


def turbine_output(state: GridState, params: GovernorParams) -> float:
    """Mechanical power response in per-unit, the p_turbine channel."""
    if params.t_turbine == 0:
        return governor_output(state, params)
    return state.x_turbine


def derivatives(
    state: GridState, params: GovernorParams, h_eff: float, net_power_pu: float
) -> GridState:
    """
    Time-derivative of every state field.

    ``net_power_pu`` is the external power balance seen by the machine:
    minus the lost generation plus the EV relief, both per-unit.
    """
    values = (state.delta_f, state.x_governor, state.x_turbine, h_eff, net_power_pu)
    if not all(map(math.isfinite, values)):
        raise NumericalError("Non-finite input to the swing equation")
    if not h_eff > 0:
        raise InvalidMixError(f"Effective inertia must be > 0, got {h_eff}")

    d_delta_f = (
        turbine_output(state, params) + net_power_pu - params.damping_d * state.delta_f
    ) / (2 * h_eff)

    if params.droop_enabled and params.t_governor > 0:
        d_governor = (
            -state.delta_f / params.droop_r - state.x_governor
        ) / params.t_governor
    else:
        d_governor = 0.0

    if params.t_turbine > 0:
        d_turbine = (
            governor_output(state, params) - state.x_turbine
        ) / params.t_turbine
    else:
        d_turbine = 0.0

    return GridState(d_delta_f, d_governor, d_turbine)
