"""
Run artifacts on disk.

Every file is written next to its final name and renamed into place, so a
reader never observes a half-written CSV.
"""
import logging
import os
import tempfile
from pathlib import Path

import pandas
import toml

from abstract.repositories import ResultRepository
from simulation.engine import TRAJECTORY_COLUMNS
from simulation.metrics import NadirReport
from simulation.scenarios import Scenario
from simulation.sweeps import DailyResult, SweepResult

logger = logging.getLogger(__name__)

NADIR_COLUMNS = [
    "nadir_hz",
    "nadir_time_s",
    "settling_time_s",
    "steady_state_hz",
    "rocof_hz_s",
    "trigger_time_s",
]
SWEEP_COLUMNS = ["level", "mode", "nadir_hz", "nadir_time_s", "settling_time_s"]
SWEEP_TRAJECTORY_COLUMNS = ["level", "mode", "t", "f_hz"]
DAILY_COLUMNS = ["time", "baseline_nadir_hz", "v1g_nadir_hz", "v2g_nadir_hz"]
SOC_COLUMNS = ["elapsed_min", "time_of_day_min", "soc"]
LOAD_COLUMNS = ["time_of_day_min", "load_mw"]


def write_atomic(path: Path, content: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    descriptor, temporary = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(descriptor, "w", newline="") as handle:
            handle.write(content)
        os.replace(temporary, path)
    except BaseException:
        Path(temporary).unlink(missing_ok=True)
        raise
    logger.info("Wrote %s", path)
    return path


def write_frame(frame: pandas.DataFrame, path: Path, columns: list[str]) -> Path:
    return write_atomic(path, frame.to_csv(columns=columns, index=False, lineterminator="\n"))


class CSVResultRepository(ResultRepository):
    @staticmethod
    def save_trajectory(frame: pandas.DataFrame, directory: Path) -> Path:
        frame = frame.assign(triggered=frame["triggered"].astype(int))
        return write_frame(frame, Path(directory) / "trajectory.csv", TRAJECTORY_COLUMNS)

    @staticmethod
    def save_nadir(report: NadirReport, directory: Path) -> Path:
        frame = pandas.DataFrame([report.to_dict()])
        return write_frame(frame, Path(directory) / "nadir.csv", NADIR_COLUMNS)

    @staticmethod
    def save_sweep(baseline: SweepResult, results: list[SweepResult], directory: Path) -> Path:
        rows = [
            {"level": result.level, "mode": result.mode.value, **result.report.to_dict()}
            for result in [baseline, *results]
        ]
        return write_frame(pandas.DataFrame(rows), Path(directory) / "sweep.csv", SWEEP_COLUMNS)

    @staticmethod
    def save_sweep_trajectories(results: list[SweepResult], directory: Path) -> Path:
        """Long format, one row per (run, step), in the order the runs are given."""
        missing = [f"{r.mode.value} at {r.level}" for r in results if r.trajectory is None]
        if missing:
            raise ValueError(f"No trajectory kept for {', '.join(missing)}")
        frame = pandas.concat(
            [
                pandas.DataFrame(
                    {
                        "level": result.level,
                        "mode": result.mode.value,
                        "t": result.trajectory.t,
                        "f_hz": result.trajectory.f,
                    }
                )
                for result in results
            ],
            ignore_index=True,
        )
        path = Path(directory) / "sweep_trajectories.csv"
        return write_frame(frame, path, SWEEP_TRAJECTORY_COLUMNS)

    @staticmethod
    def save_daily(results: list[DailyResult], directory: Path) -> Path:
        frame = pandas.DataFrame(
            [
                {
                    "time": result.time_of_day,
                    "baseline_nadir_hz": result.baseline_nadir,
                    "v1g_nadir_hz": result.v1g_nadir,
                    "v2g_nadir_hz": result.v2g_nadir,
                }
                for result in results
            ]
        )
        return write_frame(frame, Path(directory) / "daily.csv", DAILY_COLUMNS)

    @staticmethod
    def save_soc(frame: pandas.DataFrame, directory: Path) -> Path:
        return write_frame(frame, Path(directory) / "soc.csv", SOC_COLUMNS)

    @staticmethod
    def save_load(frame: pandas.DataFrame, directory: Path) -> Path:
        return write_frame(frame, Path(directory) / "load.csv", LOAD_COLUMNS)

    @staticmethod
    def save_manifest(scenario: Scenario, directory: Path) -> Path:
        return write_atomic(Path(directory) / "manifest.toml", toml.dumps(scenario.to_dict()))
