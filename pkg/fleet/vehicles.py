"""
Aggregated heavy-duty EV fleet and its under-frequency response.

All vehicles are identical and follow one charging strategy, so the fleet
is one vehicle scaled by ``vehicle_count``.
"""
import enum
import math
from dataclasses import dataclass, field, replace

import pandas

from .battery import DAY_START, BatteryConfig, state_of_charge
from .strategies import (
    MINUTES_PER_DAY,
    PRESETS,
    ChargingStrategy,
    StrategyKind,
    charging_power_per_vehicle,
    format_time_of_day,
)


class ControlMode(str, enum.Enum):
    NONE = "none"
    # stop charging
    V1G = "v1g"
    # stop charging and discharge
    V2G = "v2g"


@dataclass(frozen=True)
class FleetConfig:
    vehicle_count: int = 5000
    strategy: ChargingStrategy = PRESETS[StrategyKind.IMMEDIATE]
    battery: BatteryConfig = field(default_factory=BatteryConfig)
    mode: ControlMode = ControlMode.NONE
    participation: float = 1.0
    # kW per vehicle
    v2g_discharge_power: float = 100.0
    # seconds
    actuation_lag: float = 0.1
    day_start: float = DAY_START

    def with_response(self, mode: ControlMode, participation: float) -> "FleetConfig":
        return replace(self, mode=mode, participation=participation)

    def violations(self) -> list[str]:
        errors = []
        if self.vehicle_count < 0 or self.vehicle_count != int(self.vehicle_count):
            errors.append(f"vehicle_count must be a whole number >= 0, got {self.vehicle_count}")
        if not 0 <= self.participation <= 1:
            errors.append(f"participation must be within [0, 1], got {self.participation}")
        if not math.isfinite(self.v2g_discharge_power) or self.v2g_discharge_power < 0:
            errors.append(
                f"v2g_discharge_power must be >= 0, got {self.v2g_discharge_power}"
            )
        if not math.isfinite(self.actuation_lag) or self.actuation_lag < 0:
            errors.append(f"actuation_lag must be >= 0, got {self.actuation_lag}")
        if not 0 <= self.day_start < MINUTES_PER_DAY:
            errors.append(f"day_start must be within [0, 1440) minutes, got {self.day_start}")
        errors += [f"strategy.{error}" for error in self.strategy.violations()]
        errors += [f"battery.{error}" for error in self.battery.violations()]
        return errors

    def to_dict(self) -> dict:
        return {
            "vehicle_count": self.vehicle_count,
            "mode": self.mode.value,
            "participation": self.participation,
            "v2g_discharge_power": self.v2g_discharge_power,
            "actuation_lag": self.actuation_lag,
            "day_start": format_time_of_day(self.day_start),
            "strategy": self.strategy.to_dict(),
            "battery": self.battery.to_dict(),
        }


@dataclass(frozen=True)
class FleetSignal:
    triggered: bool = False
    trigger_time: float | None = None

    def elapsed(self, t: float) -> float:
        return t - self.trigger_time if self.triggered else 0.0


def fleet_load(fleet: FleetConfig, time_of_day: float) -> float:
    """Aggregate charging demand in MW; a vehicle stops drawing once full."""
    power = charging_power_per_vehicle(fleet.strategy, time_of_day)
    if power and state_of_charge(
        fleet.strategy, fleet.battery, time_of_day, fleet.day_start
    ) >= 1.0:
        power = 0.0
    return fleet.vehicle_count * power / 1000


def fleet_load_profile(fleet: FleetConfig, resolution: int = 15) -> pandas.DataFrame:
    times = range(0, MINUTES_PER_DAY, resolution)
    return pandas.DataFrame(
        {
            "time_of_day_min": list(times),
            "load_mw": [fleet_load(fleet, t) for t in times],
        }
    )


def actuation_factor(actuation_lag: float, elapsed: float) -> float:
    if actuation_lag == 0:
        return 1.0
    return -math.expm1(-elapsed / actuation_lag)


def fleet_response_power(
    fleet: FleetConfig,
    signal: FleetSignal,
    time_of_day: float,
    elapsed_since_trigger: float,
) -> float:
    """Positive MW relief the fleet hands to the grid after a trigger."""
    if not signal.triggered or fleet.mode is ControlMode.NONE:
        return 0.0

    relief = fleet_load(fleet, time_of_day)
    if fleet.mode is ControlMode.V2G and fleet.strategy.contains(time_of_day):
        relief += fleet.vehicle_count * fleet.v2g_discharge_power / 1000

    return (
        fleet.participation
        * relief
        * actuation_factor(fleet.actuation_lag, elapsed_since_trigger)
    )
