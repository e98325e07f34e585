from fapk.pkg.common.choices import ChoiceStringEnum


class Strategy(ChoiceStringEnum):
    Async = 'async'
    Sync = 'sync'
