import pandas
import pytest
import toml

from fleet.vehicles import ControlMode
from scenario_io.repositories import CSVResultRepository, write_atomic
from simulation.engine import simulate
from simulation.metrics import NadirReport
from simulation.scenarios import Scenario
from simulation.sweeps import DailyResult, SweepResult

REPORT = NadirReport(59.5, 1.5, 9.25, 59.73, -0.68, None)


def test_write_atomic_creates_parents_and_leaves_no_temporaries(tmp_path):
    # given
    path = tmp_path / "nested" / "out.csv"

    # when
    write_atomic(path, "a,b\n1,2\n")
    write_atomic(path, "a,b\n3,4\n")

    # then
    assert path.read_text() == "a,b\n3,4\n"
    assert [p.name for p in path.parent.iterdir()] == ["out.csv"]


def test_trajectory_csv(tmp_path):
    # given
    frame = simulate(Scenario(horizon=1.0).with_response(ControlMode.V1G, 1.0)).to_frame()

    # when
    path = CSVResultRepository.save_trajectory(frame, tmp_path)

    # then
    lines = path.read_text().splitlines()
    assert lines[0] == "t,f_hz,delta_f_pu,p_turbine_pu,p_ev_mw,triggered"
    assert lines[1] == "0.0,60.0,0.0,0.0,0.0,0"
    assert len(lines) == 102
    assert "\r" not in path.read_text()


def test_nadir_csv_keeps_missing_values_empty(tmp_path):
    # given
    # when
    path = CSVResultRepository.save_nadir(REPORT, tmp_path)

    # then
    assert path.read_text() == (
        "nadir_hz,nadir_time_s,settling_time_s,steady_state_hz,rocof_hz_s,trigger_time_s\n"
        "59.5,1.5,9.25,59.73,-0.68,\n"
    )


def test_sweep_csv_puts_the_baseline_first(tmp_path):
    # given
    baseline = SweepResult(0.0, ControlMode.NONE, REPORT)
    results = [
        SweepResult(0.5, ControlMode.V1G, REPORT),
        SweepResult(0.5, ControlMode.V2G, REPORT),
    ]

    # when
    path = CSVResultRepository.save_sweep(baseline, results, tmp_path)

    # then
    sweep = pandas.read_csv(path)
    assert sweep[["level", "mode"]].values.tolist() == [
        [0.0, "none"],
        [0.5, "v1g"],
        [0.5, "v2g"],
    ]


def test_sweep_trajectories_are_long_format(tmp_path):
    # given
    scenario = Scenario(horizon=0.5)
    v2g = scenario.with_response(ControlMode.V2G, 1.0)
    results = [
        SweepResult(0.0, ControlMode.NONE, REPORT, simulate(scenario)),
        SweepResult(1.0, ControlMode.V2G, REPORT, simulate(v2g)),
    ]

    # when
    path = CSVResultRepository.save_sweep_trajectories(results, tmp_path)

    # then
    lines = path.read_text().splitlines()
    assert lines[0] == "level,mode,t,f_hz"
    assert lines[1] == "0.0,none,0.0,60.0"
    assert lines[52] == "1.0,v2g,0.0,60.0"
    assert len(lines) == 1 + 2 * 51


def test_sweep_trajectories_need_every_run(tmp_path):
    # given
    results = [SweepResult(0.5, ControlMode.V1G, REPORT)]

    # when
    with pytest.raises(ValueError, match="v1g at 0.5"):
        CSVResultRepository.save_sweep_trajectories(results, tmp_path)

    # then
    assert not (tmp_path / "sweep_trajectories.csv").exists()


def test_daily_csv(tmp_path):
    # given
    results = [DailyResult(0, 59.4, 59.5, 59.6), DailyResult(15, 59.41, 59.51, 59.61)]

    # when
    path = CSVResultRepository.save_daily(results, tmp_path)

    # then
    assert path.read_text().splitlines() == [
        "time,baseline_nadir_hz,v1g_nadir_hz,v2g_nadir_hz",
        "0,59.4,59.5,59.6",
        "15,59.41,59.51,59.61",
    ]


def test_manifest_makes_every_default_explicit(tmp_path):
    # given
    scenario = Scenario(h_override=6.4)

    # when
    path = CSVResultRepository.save_manifest(scenario, tmp_path)

    # then
    manifest = toml.loads(path.read_text())
    assert manifest["mix"]["h_override"] == 6.4
    assert len(manifest["mix"]["sources"]) == 7
    assert manifest["governor"]["droop_r"] == 0.05
    assert manifest["fleet"]["strategy"]["kind"] == "immediate"
    assert manifest["fleet"]["day_start"] == "06:00"
    assert manifest["simulation"] == {
        "trigger_threshold": 59.7,
        "time_of_day": "20:00",
        "horizon": 60.0,
        "dt": 0.01,
    }


@pytest.mark.parametrize("saver", ["save_soc", "save_load"])
def test_fleet_csvs_require_their_columns(tmp_path, saver):
    # given
    frame = pandas.DataFrame({"unrelated": [1]})

    # when
    # then
    with pytest.raises(KeyError):
        getattr(CSVResultRepository, saver)(frame, tmp_path)
