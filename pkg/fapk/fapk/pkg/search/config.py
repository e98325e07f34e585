from dataclasses import asdict, dataclass, replace

from django.conf import settings

from fapk.pkg.availability.site import GapParams
from fapk.pkg.model.choices import ConstraintKind
from fapk.pkg.search.choices import SearchMode, Strategy


@dataclass(frozen=True)
class SearchConfig(object):
    """
    :param budget: seconds of search, None for an unlimited search
    :param rr_gap: receiver gap assumed for paths not yet assigned
    :param cart8: reduce the domains around 8-link sites before searching
    :param seed: shuffles ties between equally scored values when set
    """
    mode: SearchMode = SearchMode.AvSel
    strategy: Strategy = Strategy.Async
    budget: float = None
    rr_gap: int = 60
    cart8: bool = True
    seed: int = None

    def __post_init__(self):
        object.__setattr__(self, 'mode', SearchMode(self.mode))
        object.__setattr__(self, 'strategy', Strategy(self.strategy))
        if self.budget is not None and self.budget <= 0:
            raise ValueError('Time budget must be positive, got %r'
                             % self.budget)

    @classmethod
    def from_settings(cls, **overrides):
        values = {'rr_gap': settings.FAPK_RR_GAP}
        values.update(overrides)
        return cls(**values)

    def gaps_for(self, instance):
        """
        Gaps used by availability during the search. The receiver gap never
        exceeds the smallest receiver-receiver gap of the instance, so
        availability stays an over-estimate of what any completion reaches.
        :param instance: Instance
        :return: GapParams
        """
        rr_gaps = [c.gap for c in instance.constraints
                   if c.kind == ConstraintKind.RxRx]
        rr = min([self.rr_gap] + rr_gaps)
        return GapParams.from_settings(rr=rr)

    def with_options(self, **options):
        return replace(self, **options)

    def to_dict(self):
        data = asdict(self)
        data['mode'] = str(self.mode)
        data['strategy'] = str(self.strategy)
        return data
