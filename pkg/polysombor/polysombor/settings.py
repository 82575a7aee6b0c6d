"""
Django settings for the polysombor project.

Django is used for settings, logging configuration and the management-command
CLI; there is no database.
"""
import os
import logging

logging.getLogger("newrelic").setLevel(logging.CRITICAL)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

REPORT_ROOT = os.path.join(BASE_DIR, "reports")

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv("DJANGO_SECRET_KEY", "polysombor-insecure-local-key")

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = (
    'polysombor.apps.PolySomborConfig',
    'rest_framework',
)

REST_FRAMEWORK = {
    'UNICODE_JSON': True,
    'COMPACT_JSON': True,
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [],
    'UNAUTHENTICATED_USER': None,
}

DATABASES = {}

DEFAULT_AUTO_FIELD = 'django.db.models.AutoField'

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'loggers': {
        'polysombor': {
            'handlers': ['console'],
            'level': 'INFO',
            'propagate': False,
        },
    },
}

LANGUAGE_CODE = 'en'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Sombor verification

# relative margin for numeric comparisons, scaled by max(1, |a|, |b|)
SOMBOR_COMPARISON_MARGIN = 1e-9

SOMBOR_DEFAULT_GRID = os.path.join(BASE_DIR, "polysombor", "fixtures", "default_grid.json")

SOMBOR_UNIT_POOL = [
    'C3', 'C4', 'C5', 'C6', 'C7', 'C8',
    'K2', 'K3', 'K4', 'K5',
    'P2', 'P3', 'P4', 'P5',
]

# the all-K_1 circuit is the equality case of the 2k*sqrt(2) bound
SOMBOR_CIRCUIT_EXTRA_UNITS = ['K1']

# inclusive
SOMBOR_UNIT_COUNT_RANGE = (2, 5)
