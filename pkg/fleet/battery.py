"""
Per-vehicle state of charge across one service day.

A heavy-duty vehicle leaves the depot full each morning and recharges
off duty. SOC series therefore start at ``day_start`` (06:00 by default,
after every built-in session has ended) and run 24 hours forward, which
keeps sessions that wrap midnight in one piece.
"""
import math
from dataclasses import dataclass

import numpy
import pandas

from .exceptions import InvalidBatteryError
from .strategies import MINUTES_PER_DAY, ChargingStrategy, charging_power_per_vehicle

DAY_START = 6 * 60


@dataclass(frozen=True)
class BatteryConfig:
    # kWh
    capacity: float = 700.0
    initial_soc: float = 0.0
    charge_efficiency: float = 1.0

    def violations(self) -> list[str]:
        errors = []
        if not math.isfinite(self.capacity) or self.capacity <= 0:
            errors.append(f"capacity must be > 0, got {self.capacity}")
        if not 0 <= self.initial_soc <= 1:
            errors.append(f"initial_soc must be within [0, 1], got {self.initial_soc}")
        if not 0 < self.charge_efficiency <= 1:
            errors.append(
                f"charge_efficiency must be within (0, 1], got {self.charge_efficiency}"
            )
        return errors

    def to_dict(self) -> dict:
        return {
            "capacity": self.capacity,
            "initial_soc": self.initial_soc,
            "charge_efficiency": self.charge_efficiency,
        }


def _check_battery(battery: BatteryConfig):
    if not battery.capacity > 0:
        raise InvalidBatteryError(f"Battery capacity must be > 0, got {battery.capacity}")


def soc_trajectory(
    strategy: ChargingStrategy,
    battery: BatteryConfig,
    resolution: int = 1,
    day_start: float = DAY_START,
) -> pandas.DataFrame:
    """
    SOC sampled every ``resolution`` minutes over one service day.

    Columns are ``elapsed_min`` (from ``day_start``), ``time_of_day_min`` and
    ``soc``. Power is held over each interval from its left edge.
    """
    _check_battery(battery)
    if resolution <= 0 or MINUTES_PER_DAY % resolution:
        raise ValueError(f"Resolution must divide {MINUTES_PER_DAY} minutes, got {resolution}")

    elapsed = numpy.arange(0, MINUTES_PER_DAY + resolution, resolution)
    time_of_day = (day_start + elapsed) % MINUTES_PER_DAY
    power = numpy.array(
        [charging_power_per_vehicle(strategy, t) for t in time_of_day[:-1]]
    )
    # kW-minutes keeps integer inputs exact
    energy = numpy.concatenate(([0.0], numpy.cumsum(power * resolution)))
    soc = numpy.minimum(
        1.0,
        battery.initial_soc
        + battery.charge_efficiency * energy / (60 * battery.capacity),
    )
    return pandas.DataFrame(
        {"elapsed_min": elapsed, "time_of_day_min": time_of_day, "soc": soc}
    )


def state_of_charge(
    strategy: ChargingStrategy,
    battery: BatteryConfig,
    time_of_day: float,
    day_start: float = DAY_START,
) -> float:
    """Analytic SOC at one time of day on the same service-day anchor."""
    _check_battery(battery)
    elapsed = (time_of_day - day_start) % MINUTES_PER_DAY
    energy = strategy.charge_power * _charged_minutes(strategy, elapsed, day_start)
    return min(
        1.0,
        battery.initial_soc
        + battery.charge_efficiency * energy / (60 * battery.capacity),
    )


def _charged_minutes(strategy: ChargingStrategy, elapsed: float, day_start: float) -> float:
    """Window minutes inside [0, elapsed) of the service day starting at ``day_start``."""
    start = (strategy.window_start - day_start) % MINUTES_PER_DAY
    end = start + strategy.duration
    # a window open at day_start shows up as a tail at the start of the axis
    segments = [(start, min(end, MINUTES_PER_DAY))]
    if end > MINUTES_PER_DAY:
        segments.append((0.0, end - MINUTES_PER_DAY))
    return sum(max(0.0, min(elapsed, high) - low) for low, high in segments)
