from django.apps import AppConfig


class ScenarioIOConfig(AppConfig):
    name = "scenario_io"
    verbose_name = "Scenario files and run artifacts"
