import abc
from pathlib import Path
from typing import Generic, TypeVar

Imported = TypeVar("Imported")


class ImporterInterface(abc.ABC, Generic[Imported]):
    """Reads one input file into a domain value or raises a FreqlabError."""

    @abc.abstractmethod
    def process(self, path: Path) -> Imported:
        pass
