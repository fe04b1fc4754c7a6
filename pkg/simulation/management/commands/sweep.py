from django.conf import settings
from django.core.management import CommandError

from fleet.strategies import get_strategy
from scenario_io.commands import FreqlabCommand
from scenario_io.plots import plot_sweep
from scenario_io.repositories import CSVResultRepository
from simulation.sweeps import baseline_run, sweep_participation


def parse_levels(value: str) -> list[float]:
    try:
        levels = [float(level) for level in value.split(",") if level.strip()]
    except ValueError:
        raise CommandError(f"Malformed --levels '{value}', expected e.g. 0.2,0.4,1.0", returncode=2)
    if not levels:
        raise CommandError("--levels must name at least one level", returncode=2)
    outside = [level for level in levels if not 0 <= level <= 1]
    if outside:
        raise CommandError(
            f"Participation levels must be within [0, 1], got {', '.join(map(str, outside))}",
            returncode=2,
        )
    return levels


class Command(FreqlabCommand):
    help = "Participation sweep over V1G and V2G, written to sweep.csv with the no-EV baseline"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_scenario_argument(parser)
        self.add_workers_argument(parser)
        parser.add_argument(
            "--levels",
            default=",".join(str(level) for level in settings.SIMULATION["SWEEP_LEVELS"]),
            help="Comma-separated participation fractions",
        )
        parser.add_argument("--strategy", help="Charging strategy preset replacing the scenario's")
        parser.add_argument(
            "--trajectories",
            action="store_true",
            help="Also write every run's frequency to sweep_trajectories.csv",
        )
        parser.add_argument(
            "--plot",
            action="store_true",
            default=settings.SIMULATION["PLOT"],
            help="Also render sweep.svg",
        )

    def handle(self, *args, **options):
        levels = parse_levels(options["levels"])
        scenario = self.load_scenario(options)
        if options.get("strategy"):
            scenario = scenario.with_strategy(get_strategy(options["strategy"]))

        band = settings.SIMULATION["SETTLING_BAND"]
        keep = bool(options.get("trajectories") or options.get("plot"))
        baseline = baseline_run(scenario, band, keep_trajectory=keep)
        results = sweep_participation(
            scenario,
            levels,
            band=band,
            workers=options["workers"],
            progress=options["verbosity"] > 1,
            keep_trajectories=keep,
        )

        out = self.output_dir(options)
        CSVResultRepository.save_sweep(baseline, results, out)
        CSVResultRepository.save_manifest(scenario, out)
        if options.get("trajectories"):
            CSVResultRepository.save_sweep_trajectories([baseline, *results], out)
        if options.get("plot"):
            plot_sweep(baseline, results, out / "sweep.svg", scenario.trigger_threshold)
        self.done(
            f"{len(results) + 1} sweep rows, baseline nadir {baseline.report.nadir:.4f} Hz -> {out}"
        )
