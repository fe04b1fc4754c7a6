from dataclasses import replace

from django.core.management import CommandError

from fleet.battery import soc_trajectory
from fleet.strategies import get_strategy
from fleet.vehicles import fleet_load_profile
from scenario_io.commands import FreqlabCommand
from scenario_io.repositories import CSVResultRepository


class Command(FreqlabCommand):
    help = "Per-minute SOC (soc.csv) and fleet load curve (load.csv) for a charging preset"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_scenario_argument(parser)
        parser.add_argument("--strategy", required=True, help="immediate, delayed or constant")
        parser.add_argument("--resolution", type=int, default=1, help="SOC step in minutes")

    def handle(self, *args, **options):
        strategy = get_strategy(options["strategy"])
        fleet = replace(self.load_scenario(options).fleet, strategy=strategy)

        try:
            soc = soc_trajectory(
                strategy, fleet.battery, options["resolution"], fleet.day_start
            )
        except ValueError as error:
            raise CommandError(str(error), returncode=2)
        load = fleet_load_profile(fleet)

        out = self.output_dir(options)
        CSVResultRepository.save_soc(soc, out)
        CSVResultRepository.save_load(load, out)
        full = soc[soc["soc"] >= 1.0]
        if full.empty:
            self.done(f"{strategy.kind.value}: battery never fills -> {out}")
        else:
            self.done(
                f"{strategy.kind.value}: full at minute {int(full['time_of_day_min'].iloc[0])} -> {out}"
            )
