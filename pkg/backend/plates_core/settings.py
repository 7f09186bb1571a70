"""
Django settings for plates_core project.

The project has no database, no URL routing and no web server. Django provides
the settings layer, the management commands (``manage.py point``, ``sweep``,
``figure``, ``oracle``, ``sensitivity``), form-based validation of run
configurations and the test runner.

For more information on this file, see
https://docs.djangoproject.com/en/4.2/topics/settings/
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# Nothing is signed or stored, but Django expects a key to be present.
SECRET_KEY = os.environ.get("PLATES_SECRET_KEY", "plates-insecure-local-only")

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    # One app per library module
    "units",
    "numerics",
    "chameleon",
    "background",
    "experiment",
    "cli",
]

# No persistence beyond output files.
DATABASES = {}


# ------- Numerical / physical defaults -------
#
# Read through plates_core.conf.plates_setting(); every key has a built-in
# fallback there, so only overrides need to be listed here.

CHAMELEON_PLATES = {
    "M_PL_GEV": 2.0e18,
    "LAMBDA_GEV": 2.4e-12,
    "QUAD_REL_TOL": 1e-10,
    "QUAD_MAX_LEVELS": 12,
    "ROOT_REL_TOL": 1e-12,
    "REGIME_ALGEBRAIC_MAX": 0.1,
    "REGIME_SCREENED_MIN": 10.0,
    "WORKERS": int(os.environ.get("PLATES_WORKERS", "1")),
}


# ------- Logging -------
# Logs go to stderr so CSV on stdout stays clean.

PLATES_LOG_LEVEL = os.environ.get("PLATES_LOG_LEVEL", "INFO")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} {levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "verbose",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": "WARNING",
    },
    "loggers": {
        app: {
            "handlers": ["console"],
            "level": PLATES_LOG_LEVEL,
            "propagate": False,
        }
        for app in INSTALLED_APPS
    },
}
