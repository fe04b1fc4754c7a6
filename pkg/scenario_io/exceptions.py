from pathlib import Path

from abstract.exceptions import FreqlabError


class ScenarioFileError(FreqlabError, OSError):
    def __init__(self, path: Path, message: str, line: int | None = None):
        self.path = path
        self.line = line
        location = f"{path}:{line}" if line else f"{path}"
        super().__init__(f"{location}: {message}")
