from django.apps import AppConfig


class BenchConfig(AppConfig):
    name = 'fapk.pkg.bench'
    label = 'bench'
