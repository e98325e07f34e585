"""
Local settings. File must be named `local.py`.
Override the broker and the solver knobs here, e.g. to run the bench
against the Redis worker of docker-compose.
"""

from .common import *

FAPK_BROKER_URL = os.environ.get('FAPK_BROKER_URL', 'redis://redis:6379/0')
CELERY_BROKER_URL = FAPK_BROKER_URL
CELERY_RESULT_BACKEND = FAPK_BROKER_URL
CELERY_TASK_ALWAYS_EAGER = False

LOGGING['loggers']['fapk']['level'] = 'DEBUG'
