import math
from dataclasses import dataclass, field, replace

from abstract.scenarios import ScenarioInterface
from dynamics.grid import Disturbance, GovernorParams
from dynamics.mix import CALIFORNIA_MIX, GenerationMix, effective_inertia
from fleet.strategies import MINUTES_PER_DAY, ChargingStrategy, format_time_of_day
from fleet.vehicles import ControlMode, FleetConfig

from .exceptions import ScenarioValidationError

NOMINAL_FREQUENCY = 60.0


@dataclass(frozen=True)
class Scenario(ScenarioInterface):
    mix: GenerationMix = CALIFORNIA_MIX
    # seconds, replaces the inertia computed from the mix
    h_override: float | None = None
    governor: GovernorParams = field(default_factory=GovernorParams)
    fleet: FleetConfig = field(default_factory=FleetConfig)
    disturbance: Disturbance = field(default_factory=Disturbance)
    trigger_threshold: float = 59.7
    # 2021-02-28 20:00
    sim_time_of_day: float = 20 * 60
    horizon: float = 60.0
    dt: float = 0.01

    @classmethod
    def from_interface(cls, scenario: ScenarioInterface) -> "Scenario":
        return cls(
            mix=scenario.mix,
            h_override=scenario.h_override,
            governor=scenario.governor,
            fleet=scenario.fleet,
            disturbance=scenario.disturbance,
            trigger_threshold=scenario.trigger_threshold,
            sim_time_of_day=scenario.sim_time_of_day,
            horizon=scenario.horizon,
            dt=scenario.dt,
        )

    @property
    def h_eff(self) -> float:
        if self.h_override is not None:
            return self.h_override
        return effective_inertia(self.mix)

    @property
    def step_count(self) -> int:
        return round(self.horizon / self.dt)

    def baseline(self) -> "Scenario":
        return self.with_response(ControlMode.NONE, self.fleet.participation)

    def with_response(self, mode: ControlMode, participation: float) -> "Scenario":
        return replace(self, fleet=self.fleet.with_response(mode, participation))

    def with_strategy(self, strategy: ChargingStrategy) -> "Scenario":
        return replace(self, fleet=replace(self.fleet, strategy=strategy))

    def violations(self) -> list[str]:
        errors = [f"mix.{error}" for error in self.mix.violations()]
        if self.h_override is not None and not (
            math.isfinite(self.h_override) and self.h_override > 0
        ):
            errors.append(f"mix.h_override must be > 0, got {self.h_override}")
        errors += [f"governor.{error}" for error in self.governor.violations()]
        errors += [f"fleet.{error}" for error in self.fleet.violations()]
        errors += [f"disturbance.{error}" for error in self.disturbance.violations()]

        if not math.isfinite(self.dt) or self.dt <= 0:
            errors.append(f"simulation.dt must be > 0, got {self.dt}")
        elif not math.isfinite(self.horizon) or self.horizon < self.dt:
            errors.append(
                f"simulation.horizon must be >= dt ({self.dt}), got {self.horizon}"
            )
        elif not math.isclose(self.horizon / self.dt, round(self.horizon / self.dt), rel_tol=1e-9):
            errors.append(
                f"simulation.horizon must be a whole number of dt ({self.dt}) steps, "
                f"got {self.horizon}"
            )
        if not self.trigger_threshold < NOMINAL_FREQUENCY:
            errors.append(
                f"simulation.trigger_threshold must be below {NOMINAL_FREQUENCY} Hz, "
                f"got {self.trigger_threshold}"
            )
        if not 0 <= self.sim_time_of_day < MINUTES_PER_DAY:
            errors.append(
                f"simulation.time_of_day must be within [0, 1440) minutes, "
                f"got {self.sim_time_of_day}"
            )
        return errors

    def validate(self) -> "Scenario":
        violations = self.violations()
        if violations:
            raise ScenarioValidationError(violations)
        return self

    def to_dict(self) -> dict:
        """Nested sections in the scenario-file layout, every default explicit."""
        mix = self.mix.to_dict()
        if self.h_override is not None:
            mix["h_override"] = self.h_override
        return {
            "mix": mix,
            "governor": self.governor.to_dict(),
            "fleet": self.fleet.to_dict(),
            "disturbance": self.disturbance.to_dict(),
            "simulation": {
                "trigger_threshold": self.trigger_threshold,
                "time_of_day": format_time_of_day(self.sim_time_of_day),
                "horizon": self.horizon,
                "dt": self.dt,
            },
        }
