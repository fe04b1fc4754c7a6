from django.apps import AppConfig


class FleetAppConfig(AppConfig):
    name = "fleet"
    verbose_name = "Heavy-duty EV fleet"
