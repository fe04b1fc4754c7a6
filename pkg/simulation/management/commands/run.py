import logging

from django.conf import settings
from django.core.management import CommandError

from scenario_io.commands import FreqlabCommand
from scenario_io.plots import plot_frequency
from scenario_io.repositories import CSVResultRepository
from simulation.engine import simulate
from simulation.metrics import nadir_report

logger = logging.getLogger(__name__)


class Command(FreqlabCommand):
    help = "Simulate one scenario and write trajectory.csv, nadir.csv and manifest.toml"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_scenario_argument(parser)
        parser.add_argument("--mode", help="Fleet response mode: v1g, v2g or none")
        parser.add_argument("--participation", type=float, help="Enrolled fleet fraction")
        parser.add_argument(
            "--plot",
            action="store_true",
            default=settings.SIMULATION["PLOT"],
            help="Also render frequency.svg",
        )

    def handle(self, *args, **options):
        scenario = self.load_scenario(options)
        mode = scenario.fleet.mode
        participation = scenario.fleet.participation
        if options.get("mode"):
            mode = self.parse_mode(options["mode"])
        if options.get("participation") is not None:
            participation = options["participation"]
            if not 0 <= participation <= 1:
                raise CommandError(
                    f"--participation must be within [0, 1], got {participation}", returncode=2
                )
        scenario = scenario.with_response(mode, participation)

        trajectory = simulate(scenario)
        report = nadir_report(trajectory, settings.SIMULATION["SETTLING_BAND"])
        logger.info("Nadir %.4f Hz at %.2f s", report.nadir, report.nadir_time)

        out = self.output_dir(options)
        frame = trajectory.to_frame()
        CSVResultRepository.save_trajectory(frame, out)
        CSVResultRepository.save_nadir(report, out)
        CSVResultRepository.save_manifest(scenario, out)
        if options.get("plot"):
            plot_frequency(frame, out / "frequency.svg", scenario.trigger_threshold)

        self.done(
            f"Nadir {report.nadir:.4f} Hz at {report.nadir_time:.2f} s, "
            f"final {report.steady_state_f:.4f} Hz -> {out}"
        )
