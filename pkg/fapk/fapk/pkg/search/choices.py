from fapk.pkg.availability.choices import Strategy  # noqa
from fapk.pkg.common.choices import ChoiceStringEnum


class SearchMode(ChoiceStringEnum):
    # Cumulative: each mode keeps the behaviour of the previous one.
    AvSel = 'av-sel'
    AvObj = 'av-obj'
    AvFilt = 'av-filt'

    @property
    def uses_objective(self):
        return self in (SearchMode.AvObj, SearchMode.AvFilt)

    @property
    def uses_filter(self):
        return self == SearchMode.AvFilt


class StopReason(ChoiceStringEnum):
    Solved = 'solved'
    Exhausted = 'exhausted'
    Budget = 'budget'
