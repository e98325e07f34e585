"""
Django settings for fapk project.

No database is used: Django provides settings, management commands
and the test runner around the solver packages.
"""
import os

BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

SECRET_KEY = os.environ.get('FAPK_SECRET_KEY', 'fapk-not-secret')

DEBUG = False

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'fapk.pkg.bench.apps.BenchConfig',
]

DATABASES = {}

USE_TZ = True
TIME_ZONE = 'UTC'

REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_RENDERER_CLASSES': (
        'rest_framework.renderers.JSONRenderer',
        'rest_framework_csv.renderers.CSVRenderer',
    ),
}

# Solver

FAPK_RR_GAP = 60
FAPK_RR_CAP = 80
FAPK_FAR_FIELD_GAP = 30
FAPK_FAR_FIELD_CAP = 50
FAPK_FAR_FIELD_PROBABILITY = 0.02
FAPK_FILTER_MIN_LINKS = 4
FAPK_FILTER_ASSIGNED_RATIO = 0.5
FAPK_ORACLE_MAX_DOMAIN = 20
FAPK_DEFAULT_BUDGETS = (5, 60)
# `solve` without --budget; --unlimited lifts it
FAPK_SOLVE_BUDGET = 60

# Harness

FAPK_THREADS = int(os.environ.get('FAPK_THREADS', 1))
FAPK_BROKER_URL = os.environ.get('FAPK_BROKER_URL')

CELERY_BROKER_URL = FAPK_BROKER_URL or 'memory://'
CELERY_RESULT_BACKEND = FAPK_BROKER_URL
CELERY_TASK_ALWAYS_EAGER = not FAPK_BROKER_URL
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_ACCEPT_CONTENT = ['json']
CELERY_WORKER_CONCURRENCY = FAPK_THREADS

# Logging

FAPK_LOG_LEVEL = os.environ.get('FAPK_LOG_LEVEL', 'INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(levelname)s %(asctime)s %(name)s %(message)s'
        },
        'simple': {
            'format': '%(levelname)s %(message)s'
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'verbose'
        },
    },
    'loggers': {
        'fapk': {
            'handlers': ['console'],
            'level': FAPK_LOG_LEVEL,
            'propagate': False,
        },
        'celery': {
            'handlers': ['console'],
            'level': 'WARNING',
        },
    },
}
