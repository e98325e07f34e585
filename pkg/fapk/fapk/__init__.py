from __future__ import absolute_import, unicode_literals

# Loaded with the settings so that bench tasks bind to this app.
from .celery import app as celery_app

__all__ = ['celery_app']
