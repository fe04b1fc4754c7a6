from pathlib import Path

from scenario_io.commands import FreqlabCommand
from scenario_io.importers import parse_profile


class Command(FreqlabCommand):
    help = "Check a scenario (and optionally a daily profile) without simulating"

    def add_arguments(self, parser):
        self.add_scenario_argument(parser, required=True)
        parser.add_argument("--profile", type=Path, help="Daily profile to check as well")

    def handle(self, *args, **options):
        scenario = self.load_scenario(options)
        if options.get("profile"):
            parse_profile(options["profile"])
        self.done(
            f"{options['scenario']}: valid, {len(scenario.mix.sources)} sources, "
            f"{scenario.mix.base_power:g} MW, H_eff {scenario.h_eff:.4f} s"
        )
