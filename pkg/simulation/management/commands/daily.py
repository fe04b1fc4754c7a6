from pathlib import Path

from django.conf import settings

from scenario_io.commands import FreqlabCommand
from scenario_io.importers import parse_profile
from scenario_io.repositories import CSVResultRepository
from simulation.sweeps import daily_sweep


class Command(FreqlabCommand):
    help = "Baseline, V1G and V2G nadirs for every 15-minute entry of a daily profile"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_scenario_argument(parser)
        self.add_workers_argument(parser)
        parser.add_argument(
            "--profile",
            type=Path,
            default=settings.DATA_DIR / "synthetic-day.profile",
            help="Daily generation-mix profile (CSV, 96 entries)",
        )

    def handle(self, *args, **options):
        profile = parse_profile(options["profile"])
        template = self.load_scenario(options)
        results = daily_sweep(
            profile,
            template,
            workers=options["workers"],
            progress=options["verbosity"] > 1,
        )

        out = self.output_dir(options)
        CSVResultRepository.save_daily(results, out)
        CSVResultRepository.save_manifest(template, out)
        self.done(f"{len(results)} daily rows -> {out}")
