# Test wiring: the suite is written for Django's test runner, which loads
# the settings and app registry before collecting tests. Do the same here
# so `pytest` can run it.
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'fapk.settings')
django.setup()
