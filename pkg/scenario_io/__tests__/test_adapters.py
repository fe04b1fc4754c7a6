import pytest

from dynamics.mix import CALIFORNIA_MIX
from fleet.strategies import StrategyKind
from fleet.vehicles import ControlMode
from scenario_io.adapters import (
    TOMLFleetAdapter,
    TOMLGovernorAdapter,
    TOMLMixAdapter,
    TOMLScenarioAdapter,
    TOMLStrategyAdapter,
)
from simulation.scenarios import Scenario


def test_empty_file_gives_documented_defaults():
    # given
    adapter = TOMLScenarioAdapter({})

    # when
    scenario = Scenario.from_interface(adapter)

    # then
    assert scenario == Scenario()
    assert adapter.errors == []


@pytest.mark.parametrize(
    "input_value,output_value",
    [
        (0.05, 0.05),
        (0.1, 0.1),
        (1, 1.0),
        ("disabled", None),
    ],
)
def test_droop_values(input_value, output_value):
    # given
    adapter = TOMLGovernorAdapter({"droop_r": input_value}, "governor", [])

    # when
    # then
    assert adapter.governor.droop_r == output_value
    assert adapter.errors == []


@pytest.mark.parametrize("input_value", ["off", True, [0.05]])
def test_bad_droop_falls_back_to_default(input_value):
    # given
    errors = []
    adapter = TOMLGovernorAdapter({"droop_r": input_value}, "governor", errors)

    # when
    governor = adapter.governor

    # then
    assert governor.droop_r == 0.05
    assert errors[0].startswith("governor.droop_r: expected a number")


def test_sources_and_override():
    # given
    data = {
        "sources": [
            {"name": "gas", "inertia_constant": 5, "power_output": 800},
            {"name": "solar", "inertia_constant": 0.0, "power_output": 200.0},
        ],
        "h_override": 6.4,
    }
    adapter = TOMLMixAdapter(data, "mix", [])

    # when
    mix = adapter.mix

    # then
    assert [source.name for source in mix.sources] == ["gas", "solar"]
    assert mix.base_power == 1000.0
    assert adapter.h_override == 6.4
    assert adapter.errors == []


def test_missing_sources_use_the_default_mix():
    # given
    adapter = TOMLMixAdapter({}, "mix", [])

    # when
    # then
    assert adapter.mix is CALIFORNIA_MIX
    assert adapter.h_override is None


def test_source_errors_carry_their_index():
    # given
    errors = []
    data = {"sources": [{"name": "gas", "power_output": 1.0}, {"name": "hydro", "power_output": "lots"}]}

    # when
    TOMLMixAdapter(data, "mix", errors).mix

    # then
    assert errors == ["mix.sources[1].power_output: expected a number, got 'lots'"]


@pytest.mark.parametrize(
    "data,kind,charge_power,window",
    [
        ({}, StrategyKind.IMMEDIATE, 100.0, (960, 1380)),
        ({"kind": "delayed"}, StrategyKind.DELAYED, 100.0, (1380, 360)),
        ({"kind": "constant", "charge_power": 40}, StrategyKind.CONSTANT_MINIMUM, 40.0, (960, 360)),
        ({"kind": "immediate", "window_start": "17:30"}, StrategyKind.IMMEDIATE, 100.0, (1050, 1380)),
        ({"window_end": 1200}, StrategyKind.IMMEDIATE, 100.0, (960, 1200.0)),
    ],
)
def test_strategy_presets_and_overrides(data, kind, charge_power, window):
    # given
    adapter = TOMLStrategyAdapter(data, "fleet.strategy", [])

    # when
    strategy = adapter.strategy

    # then
    assert strategy.kind is kind
    assert strategy.charge_power == charge_power
    assert (strategy.window_start, strategy.window_end) == window
    assert adapter.errors == []


def test_unknown_strategy_kind():
    # given
    errors = []

    # when
    strategy = TOMLStrategyAdapter({"kind": "fast"}, "fleet.strategy", errors).strategy

    # then
    assert strategy.kind is StrategyKind.IMMEDIATE
    assert errors == [
        "fleet.strategy.kind: expected one of immediate, delayed, constant, got 'fast'"
    ]


@pytest.mark.parametrize("value", ["soon", "7:xx", True, None])
def test_bad_time_of_day(value):
    # given
    errors = []

    # when
    TOMLStrategyAdapter({"window_start": value}, "fleet.strategy", errors).strategy

    # then
    assert errors[0].startswith("fleet.strategy.window_start")


def test_fleet_section():
    # given
    data = {
        "vehicle_count": 2000,
        "mode": "V2G",
        "participation": 0.4,
        "day_start": "05:00",
        "battery": {"capacity": 500},
    }
    adapter = TOMLFleetAdapter(data, "fleet", [])

    # when
    fleet = adapter.fleet

    # then
    assert fleet.vehicle_count == 2000
    assert fleet.mode is ControlMode.V2G
    assert fleet.participation == 0.4
    assert fleet.day_start == 300
    assert fleet.battery.capacity == 500.0
    assert adapter.errors == []


def test_fractional_vehicle_count_is_rejected():
    # given
    errors = []

    # when
    fleet = TOMLFleetAdapter({"vehicle_count": 10.5}, "fleet", errors).fleet

    # then
    assert fleet.vehicle_count == 5000
    assert errors == ["fleet.vehicle_count: expected an integer, got 10.5"]


def test_unknown_keys_are_reported_with_their_path():
    # given
    data = {"mix": {"weight": 1}, "fleet": {"battery": {"size": 3}}, "extra": {}}
    adapter = TOMLScenarioAdapter(data)

    # when
    Scenario.from_interface(adapter)

    # then
    assert sorted(adapter.errors) == [
        "extra: unknown key",
        "fleet.battery.size: unknown key",
        "mix.weight: unknown key",
    ]


def test_section_must_be_a_table():
    # given
    adapter = TOMLScenarioAdapter({"governor": 3})

    # when
    scenario = Scenario.from_interface(adapter)

    # then
    assert scenario.governor == Scenario().governor
    assert adapter.errors == ["governor: expected a table"]
