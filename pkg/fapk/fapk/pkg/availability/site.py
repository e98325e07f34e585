from dataclasses import dataclass, field

from django.conf import settings

from fapk.pkg.model.settings import DUPLEX_GAP, TX_RX_GAP, TX_TX_GAP


@dataclass(frozen=True)
class GapParams(object):
    """Gaps that parameterize availability for paths not yet assigned."""
    tt: int = TX_TX_GAP
    tr: int = TX_RX_GAP
    rr: int = 60
    duplex: int = DUPLEX_GAP

    @classmethod
    def from_settings(cls, **overrides):
        values = {'rr': settings.FAPK_RR_GAP}
        values.update(overrides)
        return cls(**values)


@dataclass(frozen=True)
class SiteState(object):
    """
    Frequencies already assigned at one site and what is left to assign.
    `unassigned` counts incident paths in both directions (r).
    """
    site: int
    tx: tuple = ()
    rx: tuple = ()
    unassigned: int = 0
    gaps: GapParams = field(default_factory=GapParams)
    unassigned_tx: int = 0
    unassigned_rx: int = 0
    unassigned_links: int = 0

    @classmethod
    def from_store(cls, store, site, gaps, tentative=None):
        """

        :param store: DomainStore
        :param site: int
        :param gaps: GapParams
        :param tentative: (path, frequency) or None - treat that path as
        assigned without touching the store
        :return: SiteState
        """
        instance = store.instance
        overrides = dict([tentative]) if tentative else {}
        tx, rx = [], []
        unassigned_tx = unassigned_rx = unassigned_links = 0
        for link_id in instance.sites[site].links:
            open_paths = 0
            for path_id in instance.links[link_id].paths:
                frequency = overrides.get(path_id, store.assignment(path_id))
                is_tx = instance.paths[path_id].transmitter == site
                if frequency is None:
                    open_paths += 1
                    if is_tx:
                        unassigned_tx += 1
                    else:
                        unassigned_rx += 1
                elif is_tx:
                    tx.append(frequency)
                else:
                    rx.append(frequency)
            if open_paths == 2:
                unassigned_links += 1
        return cls(
            site=site, tx=tuple(sorted(tx)), rx=tuple(sorted(rx)),
            unassigned=unassigned_tx + unassigned_rx, gaps=gaps,
            unassigned_tx=unassigned_tx, unassigned_rx=unassigned_rx,
            unassigned_links=unassigned_links,
        )


@dataclass(frozen=True)
class AvailabilityReport(object):
    site: int
    flags: dict
    tx_count: int
    rx_count: int
    sync_count: int

    @property
    def total(self):
        """disp*(s): asynchronous transmission plus reception availability"""
        return self.tx_count + self.rx_count

    @property
    def tx_available(self):
        return tuple(f for f, (tx, _) in self.flags.items() if tx)

    @property
    def rx_available(self):
        return tuple(f for f, (_, rx) in self.flags.items() if rx)
