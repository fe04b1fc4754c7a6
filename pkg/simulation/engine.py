"""
Fixed-step time-domain simulation of one scenario.

Each step samples the frequency, latches the under-frequency trigger,
evaluates the fleet relief once and holds it (with the disturbance) across
the four Runge-Kutta stages.
"""
import logging
from dataclasses import dataclass

import numpy
import pandas

from dynamics.grid import GridState, derivatives, turbine_output
from dynamics.integrators import rk4_step
from dynamics.mix import to_per_unit
from fleet.vehicles import FleetSignal, fleet_response_power

from .scenarios import NOMINAL_FREQUENCY, Scenario

logger = logging.getLogger(__name__)

TRAJECTORY_COLUMNS = ["t", "f_hz", "delta_f_pu", "p_turbine_pu", "p_ev_mw", "triggered"]


@dataclass(frozen=True, eq=False)
class Trajectory:
    t: numpy.ndarray
    f: numpy.ndarray
    delta_f: numpy.ndarray
    p_turbine: numpy.ndarray
    p_ev: numpy.ndarray
    triggered: numpy.ndarray

    def __len__(self):
        return len(self.t)

    @property
    def trigger_time(self) -> float | None:
        fired = numpy.flatnonzero(self.triggered)
        return float(self.t[fired[0]]) if fired.size else None

    def to_frame(self) -> pandas.DataFrame:
        return pandas.DataFrame(
            dict(
                zip(
                    TRAJECTORY_COLUMNS,
                    (self.t, self.f, self.delta_f, self.p_turbine, self.p_ev, self.triggered),
                )
            )
        )


def detect_event(f: float, threshold: float, signal: FleetSignal, t: float) -> FleetSignal:
    """One-shot latch: fires at the first sample strictly below ``threshold``."""
    if signal.triggered or not f < threshold:
        return signal
    return FleetSignal(triggered=True, trigger_time=t)


def simulate(scenario: Scenario) -> Trajectory:
    scenario.validate()
    h_eff = scenario.h_eff
    governor = scenario.governor
    fleet = scenario.fleet
    steps = scenario.step_count

    logger.debug(
        "Simulating %s steps of %s s, H_eff=%.4f s, mode=%s",
        steps,
        scenario.dt,
        h_eff,
        fleet.mode.value,
    )

    columns = {name: [] for name in TRAJECTORY_COLUMNS}
    state = GridState().as_array()
    signal = FleetSignal()

    for k in range(steps + 1):
        t = k * scenario.dt
        grid = GridState.from_array(state)
        f = NOMINAL_FREQUENCY * (1 + grid.delta_f)
        signal = detect_event(f, scenario.trigger_threshold, signal, t)
        p_ev = fleet_response_power(
            fleet, signal, scenario.sim_time_of_day, signal.elapsed(t)
        )

        columns["t"].append(t)
        columns["f_hz"].append(f)
        columns["delta_f_pu"].append(grid.delta_f)
        columns["p_turbine_pu"].append(turbine_output(grid, governor))
        columns["p_ev_mw"].append(p_ev)
        columns["triggered"].append(signal.triggered)

        if k == steps:
            break

        net_power_pu = to_per_unit(p_ev - scenario.disturbance.power_at(t), scenario.mix)
        state = rk4_step(
            state,
            scenario.dt,
            lambda y: derivatives(
                GridState.from_array(y), governor, h_eff, net_power_pu
            ).as_array(),
            t=t,
        )

    if signal.triggered:
        logger.debug("Fleet signal triggered at t=%s s", signal.trigger_time)
    return Trajectory(
        t=numpy.array(columns["t"]),
        f=numpy.array(columns["f_hz"]),
        delta_f=numpy.array(columns["delta_f_pu"]),
        p_turbine=numpy.array(columns["p_turbine_pu"]),
        p_ev=numpy.array(columns["p_ev_mw"]),
        triggered=numpy.array(columns["triggered"], dtype=bool),
    )
