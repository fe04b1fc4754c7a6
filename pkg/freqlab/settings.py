"""
Django settings for freqlab project.

The project has no web surface: Django hosts the management commands
(run, sweep, daily, soc, validate) and the shared configuration below.
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Not used for anything security relevant; Django refuses to start without one.
SECRET_KEY = os.environ.get(
    "FREQLAB_SECRET_KEY", "insecure-placeholder-qbZj6O4ErzT8B5hyAkRXYQ681lmDCPRYTNueQySo9yy1z5756T"
)

DEBUG = True

ALLOWED_HOSTS = [
    "localhost",
]


# Application definition

INSTALLED_APPS = [
    "django_extensions",
    "dynamics",
    "fleet",
    "simulation",
    "scenario_io",
]

DATABASES = {}


# Simulation defaults
# Scenario defaults live with the scenario types; these are run-level knobs.

DATA_DIR = BASE_DIR / "data"

OUTPUT_DIR = Path(os.environ.get("FREQLAB_OUTPUT_DIR", BASE_DIR / "output"))

SIMULATION = {
    "SETTLING_BAND": 0.02,
    "SWEEP_LEVELS": [0.2, 0.4, 0.6, 0.8, 1.0],
    "WORKERS": int(os.environ.get("FREQLAB_WORKERS", 1)),
    "PLOT": False,
}


# Logging

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "simple": {
            "format": "%(asctime)s %(levelname)s %(name)s: %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "simple",
        },
    },
    "loggers": {
        app: {"handlers": ["console"], "level": "INFO", "propagate": False}
        for app in ("dynamics", "fleet", "simulation", "scenario_io")
    },
}


# Internationalization

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True
