from dataclasses import dataclass
from itertools import product

from fapk.pkg.availability.oracle import largest_spaced_subset
from fapk.pkg.availability.site import GapParams
from fapk.pkg.model.domain import inter_planes
from fapk.pkg.preprocess.settings import (
    IPE_TX_LIMIT, LARGE_IPE_RX_LIMIT, SMALL_IPE_RX_LIMIT
)


@dataclass(frozen=True)
class IpeProperties(object):
    ipe: object
    spread: int
    mixed_roles: bool
    max_tx: int
    max_rx: int

    @property
    def expected_rx(self):
        return LARGE_IPE_RX_LIMIT if self.ipe.is_large else SMALL_IPE_RX_LIMIT

    @property
    def separation_holds(self):
        return not self.mixed_roles

    @property
    def tx_limit_holds(self):
        return self.max_tx == IPE_TX_LIMIT

    @property
    def rx_limit_holds(self):
        return self.max_rx == self.expected_rx


@dataclass(frozen=True)
class PropertyReport(object):
    gaps: GapParams
    ipes: tuple

    @property
    def separation_holds(self):
        """No IPE carries a transmitter and a receiver of the same site."""
        return all(item.separation_holds for item in self.ipes)

    @property
    def tx_limit_holds(self):
        return all(item.tx_limit_holds for item in self.ipes)

    @property
    def rx_limit_holds(self):
        return all(item.rx_limit_holds for item in self.ipes)

    @property
    def holds(self):
        return (self.separation_holds and self.tx_limit_holds and
                self.rx_limit_holds)


def check_ipe_properties(ipes=None, gaps=None):
    """
    Enumerate each IPE to check the co-site facts the Cart8 reduction
    relies on.
    :param ipes: iterable of InterPlane, the RITA layout by default
    :param gaps: GapParams or None for the configured gaps
    :return: PropertyReport
    """
    gaps = gaps or GapParams.from_settings()
    ipes = inter_planes() if ipes is None else tuple(ipes)
    return PropertyReport(gaps=gaps, ipes=tuple(
        IpeProperties(
            ipe=ipe,
            spread=ipe.spread,
            mixed_roles=any(
                abs(x - y) >= gaps.tr
                for x, y in product(ipe.members, repeat=2)
            ),
            max_tx=largest_spaced_subset(ipe.members, gaps.tt),
            max_rx=largest_spaced_subset(ipe.members, gaps.rr),
        )
        for ipe in ipes
    ))
