"""
Batch drivers behind the participation and daily nadir studies.

Member runs are independent, so they may be spread over worker processes;
results are always returned in input order.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import partial
from typing import Callable, TypeVar

from tqdm import tqdm

from fleet.vehicles import ControlMode

from .engine import Trajectory, simulate
from .metrics import DEFAULT_SETTLING_BAND, NadirReport, nadir_report
from .profiles import DailyProfile
from .scenarios import Scenario

logger = logging.getLogger(__name__)

RESPONSE_MODES = (ControlMode.V1G, ControlMode.V2G)

Outcome = TypeVar("Outcome")


@dataclass(frozen=True)
class SweepResult:
    level: float
    mode: ControlMode
    report: NadirReport
    # only kept when the caller asks for trajectories
    trajectory: Trajectory | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class DailyResult:
    time_of_day: float
    baseline_nadir: float
    v1g_nadir: float
    v2g_nadir: float


def evaluate(scenario: Scenario, band: float = DEFAULT_SETTLING_BAND) -> NadirReport:
    return nadir_report(simulate(scenario), band)


def evaluate_with_trajectory(
    scenario: Scenario, band: float = DEFAULT_SETTLING_BAND
) -> tuple[NadirReport, Trajectory]:
    trajectory = simulate(scenario)
    return nadir_report(trajectory, band), trajectory


def run_all(
    task: Callable[[Scenario], Outcome],
    scenarios: list[Scenario],
    workers: int = 1,
    progress: bool = False,
    description: str | None = None,
) -> list[Outcome]:
    if workers <= 1:
        results = map(task, scenarios)
        return list(tqdm(results, total=len(scenarios), disable=not progress, desc=description))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        results = executor.map(task, scenarios)
        return list(tqdm(results, total=len(scenarios), disable=not progress, desc=description))


def evaluate_all(
    scenarios: list[Scenario],
    band: float = DEFAULT_SETTLING_BAND,
    workers: int = 1,
    progress: bool = False,
    description: str | None = None,
) -> list[NadirReport]:
    return run_all(partial(evaluate, band=band), scenarios, workers, progress, description)


def sweep_participation(
    scenario: Scenario,
    levels: list[float],
    band: float = DEFAULT_SETTLING_BAND,
    workers: int = 1,
    progress: bool = False,
    keep_trajectories: bool = False,
) -> list[SweepResult]:
    """
    One run per (level, mode) with everything else held fixed.

    With ``keep_trajectories`` every result also carries the trajectory it
    was measured on, so callers can export or plot it without re-running.
    """
    for level in levels:
        if not 0 <= level <= 1:
            raise ValueError(f"Participation level must be within [0, 1], got {level}")

    cases = [(level, mode) for level in levels for mode in RESPONSE_MODES]
    scenarios = [scenario.with_response(mode, level) for level, mode in cases]
    if keep_trajectories:
        task = partial(evaluate_with_trajectory, band=band)
        outcomes = run_all(task, scenarios, workers, progress, "sweep")
    else:
        reports = evaluate_all(scenarios, band, workers, progress, "sweep")
        outcomes = [(report, None) for report in reports]

    results = [
        SweepResult(level, mode, report, trajectory)
        for (level, mode), (report, trajectory) in zip(cases, outcomes)
    ]
    for mode in RESPONSE_MODES:
        best = max((r for r in results if r.mode is mode), key=lambda r: r.report.nadir, default=None)
        if best:
            logger.info(
                "Best %s nadir %.4f Hz at participation %s", mode.value, best.report.nadir, best.level
            )
    return results


def baseline_run(
    scenario: Scenario, band: float = DEFAULT_SETTLING_BAND, keep_trajectory: bool = False
) -> SweepResult:
    """The no-EV reference row of a sweep, reported at level 0 with mode none."""
    report, trajectory = evaluate_with_trajectory(scenario.baseline(), band)
    return SweepResult(0.0, ControlMode.NONE, report, trajectory if keep_trajectory else None)


def daily_sweep(
    profile: DailyProfile,
    template: Scenario,
    workers: int = 1,
    progress: bool = False,
) -> list[DailyResult]:
    """
    Baseline, V1G and V2G nadirs for every profile entry.

    Each entry replaces the template mix (so H_eff is recomputed and any
    ``h_override`` is dropped) and moves the fleet to the entry's time of day.
    The template's participation is used for both response modes.
    """
    participation = template.fleet.participation
    scenarios = []
    for entry in profile:
        scenario = replace(
            template, mix=entry.mix, h_override=None, sim_time_of_day=entry.time_of_day
        )
        scenarios += [
            scenario.baseline(),
            scenario.with_response(ControlMode.V1G, participation),
            scenario.with_response(ControlMode.V2G, participation),
        ]

    reports = evaluate_all(scenarios, workers=workers, progress=progress, description="daily")
    results = [
        DailyResult(entry.time_of_day, *(report.nadir for report in reports[3 * i : 3 * i + 3]))
        for i, entry in enumerate(profile)
    ]
    lowest = min(results, key=lambda result: result.baseline_nadir)
    logger.info(
        "Deepest baseline nadir %.4f Hz at minute %s", lowest.baseline_nadir, lowest.time_of_day
    )
    return results
