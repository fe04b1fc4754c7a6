import abc
from pathlib import Path

from abstract.scenarios import ScenarioInterface


class ResultRepository(abc.ABC):
    @staticmethod
    @abc.abstractmethod
    def save_trajectory(frame, directory: Path) -> Path:
        pass

    @staticmethod
    @abc.abstractmethod
    def save_manifest(scenario: ScenarioInterface, directory: Path) -> Path:
        pass
