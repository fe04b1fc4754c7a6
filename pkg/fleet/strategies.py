import enum
import math
from dataclasses import dataclass

from .exceptions import UnknownStrategyError

MINUTES_PER_DAY = 24 * 60


class StrategyKind(str, enum.Enum):
    IMMEDIATE = "immediate"
    DELAYED = "delayed"
    CONSTANT_MINIMUM = "constant"


@dataclass(frozen=True)
class ChargingStrategy:
    kind: StrategyKind
    # kW per vehicle
    charge_power: float
    # minutes from midnight, the window may wrap past midnight
    window_start: float
    window_end: float

    @property
    def duration(self) -> float:
        """Window length in minutes; equal start and end means the whole day."""
        return (self.window_end - self.window_start) % MINUTES_PER_DAY or MINUTES_PER_DAY

    def contains(self, time_of_day: float) -> bool:
        return (time_of_day - self.window_start) % MINUTES_PER_DAY < self.duration

    def violations(self) -> list[str]:
        errors = []
        if not math.isfinite(self.charge_power) or self.charge_power <= 0:
            errors.append(f"charge_power must be > 0, got {self.charge_power}")
        for field in ("window_start", "window_end"):
            value = getattr(self, field)
            if not math.isfinite(value) or not 0 <= value < MINUTES_PER_DAY:
                errors.append(f"{field} must be within [0, 1440) minutes, got {value}")
        return errors

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "charge_power": self.charge_power,
            "window_start": format_time_of_day(self.window_start),
            "window_end": format_time_of_day(self.window_end),
        }


PRESETS = {
    StrategyKind.IMMEDIATE: ChargingStrategy(StrategyKind.IMMEDIATE, 100.0, 16 * 60, 23 * 60),
    StrategyKind.DELAYED: ChargingStrategy(StrategyKind.DELAYED, 100.0, 23 * 60, 6 * 60),
    StrategyKind.CONSTANT_MINIMUM: ChargingStrategy(
        StrategyKind.CONSTANT_MINIMUM, 50.0, 16 * 60, 6 * 60
    ),
}


def get_strategy(name: str) -> ChargingStrategy:
    try:
        return PRESETS[StrategyKind(name.strip().lower())]
    except ValueError:
        raise UnknownStrategyError(name, [kind.value for kind in StrategyKind])


def charging_power_per_vehicle(strategy: ChargingStrategy, time_of_day: float) -> float:
    """kW drawn by one vehicle following ``strategy`` at ``time_of_day``."""
    return strategy.charge_power if strategy.contains(time_of_day) else 0.0


def parse_time_of_day(value) -> float:
    """Minutes from midnight from either a number of minutes or an "HH:MM" string."""
    if isinstance(value, str):
        hours, _, minutes = value.strip().partition(":")
        return int(hours) * 60 + int(minutes or 0)
    return float(value)


def format_time_of_day(minutes: float) -> str | float:
    """Render whole minutes as "HH:MM"; fractional minutes stay numeric."""
    if minutes != int(minutes):
        return minutes
    hours, rest = divmod(int(minutes), 60)
    return f"{hours:02d}:{rest:02d}"
