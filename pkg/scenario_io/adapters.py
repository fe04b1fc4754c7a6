"""
Typed readers over the parsed TOML tables of a scenario file.

Adapters never raise on bad input: each problem is recorded with its
dotted key path in ``errors`` and the documented default is used instead,
so one pass reports every violation.
"""
import math
from functools import cached_property

from abstract.scenarios import ScenarioInterface
from dynamics.grid import Disturbance, GovernorParams
from dynamics.mix import CALIFORNIA_MIX, GenerationMix, GenerationSource
from fleet.battery import BatteryConfig
from fleet.strategies import PRESETS, ChargingStrategy, StrategyKind, parse_time_of_day
from fleet.vehicles import ControlMode, FleetConfig
from simulation.scenarios import Scenario

DEFAULTS = Scenario()


class TOMLSectionAdapter:
    keys: set[str] = set()

    def __init__(self, data, path: str, errors: list[str]):
        self.path = path
        self.errors = errors
        if data is None:
            data = {}
        if not isinstance(data, dict):
            self.errors.append(f"{path}: expected a table")
            data = {}
        self.data = data
        for key in data:
            if key not in self.keys:
                self.errors.append(f"{self._key(key)}: unknown key")

    def _key(self, key: str) -> str:
        return f"{self.path}.{key}" if self.path else key

    def _number(self, key: str, default: float) -> float:
        value = self.data.get(key, default)
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            self.errors.append(f"{self._key(key)}: expected a number, got {value!r}")
            return default
        return float(value)

    def _integer(self, key: str, default: int) -> int:
        value = self.data.get(key, default)
        if isinstance(value, bool) or not isinstance(value, int):
            self.errors.append(f"{self._key(key)}: expected an integer, got {value!r}")
            return default
        return value

    def _text(self, key: str, default: str) -> str:
        value = self.data.get(key, default)
        if not isinstance(value, str):
            self.errors.append(f"{self._key(key)}: expected a string, got {value!r}")
            return default
        return value

    def _time_of_day(self, key: str, default: float) -> float:
        value = self.data.get(key, default)
        try:
            if isinstance(value, bool):
                raise ValueError
            minutes = parse_time_of_day(value)
            if not math.isfinite(minutes):
                raise ValueError
            return minutes
        except (TypeError, ValueError):
            self.errors.append(
                f"{self._key(key)}: expected \"HH:MM\" or minutes, got {value!r}"
            )
            return default


class TOMLSourceAdapter(TOMLSectionAdapter):
    keys = {"name", "inertia_constant", "power_output"}

    @property
    def source(self) -> GenerationSource:
        return GenerationSource(
            name=self._text("name", ""),
            inertia_constant=self._number("inertia_constant", 0.0),
            power_output=self._number("power_output", 0.0),
        )


class TOMLMixAdapter(TOMLSectionAdapter):
    keys = {"sources", "h_override"}

    @property
    def mix(self) -> GenerationMix:
        if "sources" not in self.data:
            return CALIFORNIA_MIX
        sources = self.data["sources"]
        if not isinstance(sources, list):
            self.errors.append(f"{self._key('sources')}: expected an array of tables")
            return CALIFORNIA_MIX
        return GenerationMix(
            tuple(
                TOMLSourceAdapter(data, f"{self._key('sources')}[{index}]", self.errors).source
                for index, data in enumerate(sources)
            )
        )

    @property
    def h_override(self) -> float | None:
        if "h_override" not in self.data:
            return None
        return self._number("h_override", None)


class TOMLGovernorAdapter(TOMLSectionAdapter):
    keys = {"droop_r", "t_governor", "t_turbine", "damping_d"}

    @property
    def governor(self) -> GovernorParams:
        defaults = DEFAULTS.governor
        if self.data.get("droop_r") == "disabled":
            droop_r = None
        else:
            droop_r = self._number("droop_r", defaults.droop_r)
        return GovernorParams(
            droop_r=droop_r,
            t_governor=self._number("t_governor", defaults.t_governor),
            t_turbine=self._number("t_turbine", defaults.t_turbine),
            damping_d=self._number("damping_d", defaults.damping_d),
        )


class TOMLStrategyAdapter(TOMLSectionAdapter):
    keys = {"kind", "charge_power", "window_start", "window_end"}

    @property
    def strategy(self) -> ChargingStrategy:
        kind = self._text("kind", DEFAULTS.fleet.strategy.kind.value)
        try:
            preset = PRESETS[StrategyKind(kind.strip().lower())]
        except ValueError:
            known = ", ".join(item.value for item in StrategyKind)
            self.errors.append(f"{self._key('kind')}: expected one of {known}, got {kind!r}")
            preset = DEFAULTS.fleet.strategy
        # explicit values override the preset
        return ChargingStrategy(
            kind=preset.kind,
            charge_power=self._number("charge_power", preset.charge_power),
            window_start=self._time_of_day("window_start", preset.window_start),
            window_end=self._time_of_day("window_end", preset.window_end),
        )


class TOMLBatteryAdapter(TOMLSectionAdapter):
    keys = {"capacity", "initial_soc", "charge_efficiency"}

    @property
    def battery(self) -> BatteryConfig:
        defaults = DEFAULTS.fleet.battery
        return BatteryConfig(
            capacity=self._number("capacity", defaults.capacity),
            initial_soc=self._number("initial_soc", defaults.initial_soc),
            charge_efficiency=self._number("charge_efficiency", defaults.charge_efficiency),
        )


class TOMLFleetAdapter(TOMLSectionAdapter):
    keys = {
        "vehicle_count",
        "mode",
        "participation",
        "v2g_discharge_power",
        "actuation_lag",
        "day_start",
        "strategy",
        "battery",
    }

    @property
    def mode(self) -> ControlMode:
        value = self._text("mode", DEFAULTS.fleet.mode.value)
        try:
            return ControlMode(value.strip().lower())
        except ValueError:
            known = ", ".join(mode.value for mode in ControlMode)
            self.errors.append(f"{self._key('mode')}: expected one of {known}, got {value!r}")
            return DEFAULTS.fleet.mode

    @property
    def fleet(self) -> FleetConfig:
        defaults = DEFAULTS.fleet
        return FleetConfig(
            vehicle_count=self._integer("vehicle_count", defaults.vehicle_count),
            strategy=TOMLStrategyAdapter(
                self.data.get("strategy"), self._key("strategy"), self.errors
            ).strategy,
            battery=TOMLBatteryAdapter(
                self.data.get("battery"), self._key("battery"), self.errors
            ).battery,
            mode=self.mode,
            participation=self._number("participation", defaults.participation),
            v2g_discharge_power=self._number(
                "v2g_discharge_power", defaults.v2g_discharge_power
            ),
            actuation_lag=self._number("actuation_lag", defaults.actuation_lag),
            day_start=self._time_of_day("day_start", defaults.day_start),
        )


class TOMLDisturbanceAdapter(TOMLSectionAdapter):
    keys = {"magnitude", "apply_time"}

    @property
    def disturbance(self) -> Disturbance:
        defaults = DEFAULTS.disturbance
        return Disturbance(
            magnitude=self._number("magnitude", defaults.magnitude),
            apply_time=self._number("apply_time", defaults.apply_time),
        )


class TOMLSimulationAdapter(TOMLSectionAdapter):
    keys = {"trigger_threshold", "time_of_day", "horizon", "dt"}


class TOMLScenarioAdapter(TOMLSectionAdapter, ScenarioInterface):
    keys = {"mix", "governor", "fleet", "disturbance", "simulation"}

    def __init__(self, data: dict):
        super().__init__(data, "", [])

    def _section(self, adapter_class, key):
        return adapter_class(self.data.get(key), key, self.errors)

    @cached_property
    def _mix(self) -> TOMLMixAdapter:
        return self._section(TOMLMixAdapter, "mix")

    @cached_property
    def _simulation(self) -> TOMLSimulationAdapter:
        return self._section(TOMLSimulationAdapter, "simulation")

    @cached_property
    def mix(self) -> GenerationMix:
        return self._mix.mix

    @cached_property
    def h_override(self) -> float | None:
        return self._mix.h_override

    @cached_property
    def governor(self) -> GovernorParams:
        return self._section(TOMLGovernorAdapter, "governor").governor

    @cached_property
    def fleet(self) -> FleetConfig:
        return self._section(TOMLFleetAdapter, "fleet").fleet

    @cached_property
    def disturbance(self) -> Disturbance:
        return self._section(TOMLDisturbanceAdapter, "disturbance").disturbance

    @cached_property
    def trigger_threshold(self) -> float:
        return self._simulation._number("trigger_threshold", DEFAULTS.trigger_threshold)

    @cached_property
    def sim_time_of_day(self) -> float:
        return self._simulation._time_of_day("time_of_day", DEFAULTS.sim_time_of_day)

    @cached_property
    def horizon(self) -> float:
        return self._simulation._number("horizon", DEFAULTS.horizon)

    @cached_property
    def dt(self) -> float:
        return self._simulation._number("dt", DEFAULTS.dt)
