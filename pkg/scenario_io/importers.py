import logging
from pathlib import Path

import pandas
import toml

from abstract.importers import ImporterInterface
from dynamics.mix import GenerationMix, GenerationSource
from fleet.strategies import parse_time_of_day
from simulation.exceptions import ProfileError, ScenarioValidationError
from simulation.profiles import DailyProfile, ProfileEntry
from simulation.scenarios import Scenario

from .adapters import TOMLScenarioAdapter
from .exceptions import ScenarioFileError

logger = logging.getLogger(__name__)

PROFILE_COLUMNS = ["time", "source", "inertia_s", "power_mw"]


class ScenarioImporter(ImporterInterface[Scenario]):
    def __init__(self):
        self.adapter_class = TOMLScenarioAdapter

    @staticmethod
    def load(path: Path) -> dict:
        try:
            text = Path(path).read_text()
        except OSError as error:
            raise ScenarioFileError(path, f"cannot read scenario file ({error.strerror})")
        try:
            return toml.loads(text)
        except toml.TomlDecodeError as error:
            raise ScenarioFileError(path, f"syntax error: {error.msg}", line=error.lineno)

    def process(self, path) -> Scenario:
        adapter = self.adapter_class(self.load(path))
        scenario = Scenario.from_interface(adapter)
        violations = adapter.errors + scenario.violations()
        if violations:
            raise ScenarioValidationError(violations)
        logger.info("Loaded scenario %s (H_eff=%.4f s)", path, scenario.h_eff)
        return scenario


class DailyProfileImporter(ImporterInterface[DailyProfile]):
    def process(self, path) -> DailyProfile:
        try:
            data = pandas.read_csv(path, comment="#", skipinitialspace=True)
        except (OSError, pandas.errors.ParserError, pandas.errors.EmptyDataError) as error:
            raise ProfileError(f"{path}: cannot read daily profile ({error})")

        missing = [column for column in PROFILE_COLUMNS if column not in data.columns]
        if missing:
            raise ProfileError(f"{path}: missing columns {', '.join(missing)}")

        entries = []
        for time, rows in data.groupby("time", sort=False):
            try:
                sources = tuple(
                    GenerationSource(row.source, float(row.inertia_s), float(row.power_mw))
                    for row in rows.itertuples()
                )
                entries.append(ProfileEntry(parse_time_of_day(time), GenerationMix(sources)))
            except (TypeError, ValueError) as error:
                raise ProfileError(f"{path}: bad row at time {time!r} ({error})")
        for entry in entries:
            violations = entry.mix.violations()
            if violations:
                raise ProfileError(
                    f"{path}: mix at minute {entry.time_of_day}: {'; '.join(violations)}"
                )
        return DailyProfile(tuple(entries))


def parse_scenario(path) -> Scenario:
    return ScenarioImporter().process(path)


def parse_profile(path) -> DailyProfile:
    return DailyProfileImporter().process(path)
