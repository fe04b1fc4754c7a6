import logging
from pathlib import Path

from django.conf import settings
from django.core.management import BaseCommand, CommandError

from abstract.exceptions import FreqlabError
from fleet.vehicles import ControlMode
from simulation.scenarios import Scenario

from .importers import parse_scenario

logger = logging.getLogger(__name__)


class FreqlabCommand(BaseCommand):
    """Shared flags and error handling of the freqlab commands."""

    def add_arguments(self, parser):
        parser.add_argument(
            "--out",
            type=Path,
            help="Output directory (defaults to FREQLAB_OUTPUT_DIR / settings.OUTPUT_DIR)",
        )

    def add_scenario_argument(self, parser, required=False):
        parser.add_argument(
            "--scenario",
            type=Path,
            required=required,
            help="Scenario file (TOML); documented defaults when omitted",
        )

    def add_workers_argument(self, parser):
        parser.add_argument(
            "--workers",
            type=int,
            default=settings.SIMULATION["WORKERS"],
            help="Worker processes for batch runs",
        )

    def output_dir(self, options) -> Path:
        return Path(options.get("out") or settings.OUTPUT_DIR)

    def load_scenario(self, options) -> Scenario:
        path = options.get("scenario")
        if path is None:
            return Scenario()
        return parse_scenario(path)

    def parse_mode(self, value: str) -> ControlMode:
        try:
            return ControlMode(value.strip().lower())
        except ValueError:
            known = ", ".join(mode.value for mode in ControlMode)
            raise CommandError(f"Unknown mode '{value}', expected one of: {known}", returncode=2)

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except FreqlabError as error:
            raise CommandError(str(error))
        except OSError as error:
            raise CommandError(f"{error.filename or ''}: {error.strerror or error}".strip(": "))

    def done(self, message: str):
        self.stdout.write(self.style.SUCCESS(message))
