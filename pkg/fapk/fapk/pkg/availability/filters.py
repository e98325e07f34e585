import logging

from django.conf import settings

from fapk.pkg.availability.capacity import disp_flags
from fapk.pkg.model.choices import Direction
from fapk.pkg.propagation.store import CAUSE_FILTER

logger = logging.getLogger(__name__)


def filter_is_active(store, site):
    """
    The filter runs on sites with many links, or once a large enough share
    of a site's paths is assigned.
    """
    instance = store.instance
    if instance.sites[site].degree >= settings.FAPK_FILTER_MIN_LINKS:
        return True
    paths = instance.site_paths(site)
    assigned = sum(1 for path in paths if store.is_assigned(path))
    return bool(paths) and \
        assigned >= settings.FAPK_FILTER_ASSIGNED_RATIO * len(paths)


def availability_filter(store, state, direction, source=None):
    """
    Filter the site-level availability set of one direction.

    A frequency is removed from an open incident path when assigning it there
    would empty the domain of an unassigned neighbour; it leaves the site set
    when no open path of that direction can still take it.
    Removals are trailed at the current decision level.

    :param store: DomainStore
    :param state: SiteState of the site, built from the same store
    :param direction: Direction
    :param source: path credited with the removals, the latest decision
    when omitted
    :return: list of removed (path, frequency)
    """
    site = state.site
    if not filter_is_active(store, site):
        return []

    direction = Direction(direction)
    instance = store.instance
    if direction == Direction.Tx:
        paths, flag_index = instance.tx_paths(site), 0
    else:
        paths, flag_index = instance.rx_paths(site), 1
    open_paths = [path for path in paths if not store.is_assigned(path)]
    if not open_paths:
        return []

    source = store.decision_path if source is None else source
    flags = disp_flags(state, store.site_domain(site, direction))
    removed = []
    for frequency, flag in flags.items():
        if not flag[flag_index]:
            continue
        supported = False
        for path in open_paths:
            if not store.is_consistent(path, frequency):
                continue
            if store.conflicts_empty_neighbour(path, frequency):
                store.remove(path, frequency, CAUSE_FILTER, source)
                removed.append((path, frequency))
            else:
                supported = True
        if not supported:
            store.remove_site_frequency(site, direction, frequency, source)

    if removed:
        logger.debug('Filter at site %d (%s) removed %d values',
                     site, direction, len(removed))
    return removed
