from fapk.pkg.availability.capacity import disp_async, disp_sync
from fapk.pkg.availability.choices import Strategy
from fapk.pkg.availability.site import GapParams, SiteState
from fapk.pkg.model.choices import Direction


def site_state(store, site, gaps=None, tentative=None):
    return SiteState.from_store(
        store, site, gaps or GapParams.from_settings(), tentative)


def site_capacity(store, state, strategy):
    """
    :param store: DomainStore
    :param state: SiteState
    :param strategy: Strategy
    :return: int - disp*(s) for async, dispC*(s) for sync
    """
    tx_domain = store.site_domain(state.site, Direction.Tx)
    rx_domain = store.site_domain(state.site, Direction.Rx)
    if Strategy(strategy) == Strategy.Async:
        return sum(disp_async(state, tx_domain, rx_domain))
    return disp_sync(state, tx_domain, rx_domain)


def site_measure(store, site, strategy, gaps=None, tentative=None):
    return site_capacity(
        store, site_state(store, site, gaps, tentative), strategy)


def solution_disp(store, instance, strategy, gaps=None):
    """
    Availability left over by the current assignments, summed over sites.
    :param store: DomainStore
    :param instance: Instance
    :param strategy: Strategy
    :param gaps: GapParams or None for the configured gaps
    :return: int
    """
    gaps = gaps or GapParams.from_settings()
    return sum(
        site_measure(store, site.id, strategy, gaps)
        for site in instance.sites
    )


def site_headroom(store, state, strategy):
    """
    Availability a site can still keep once its open paths are assigned,
    estimated as one unit lost per open path (async) or per open link (sync).
    """
    tx_domain = store.site_domain(state.site, Direction.Tx)
    rx_domain = store.site_domain(state.site, Direction.Rx)
    if Strategy(strategy) == Strategy.Async:
        tx_count, rx_count = disp_async(state, tx_domain, rx_domain)
        return max(0, tx_count - state.unassigned_tx +
                   rx_count - state.unassigned_rx)
    return max(0, disp_sync(state, tx_domain, rx_domain) -
               state.unassigned_links)


def tightest_open_path(store, site):
    """
    :return: the open path of `site` with the fewest surviving values,
    None when every incident path is assigned
    """
    open_paths = [path for path in store.instance.site_paths(site)
                  if not store.is_assigned(path)]
    if not open_paths:
        return None
    return min(open_paths, key=lambda path: (store.domain_size(path), path))


def site_bound(store, site, strategy, gaps):
    """
    Headroom after a one-path look-ahead: every completion gives the
    tightest open path one of its surviving values, so the site keeps at
    most the best headroom over those values. An empty domain bounds the
    site at 0.
    """
    bound = site_headroom(store, site_state(store, site, gaps), strategy)
    path = tightest_open_path(store, site)
    if path is None or bound == 0:
        return bound
    best = 0
    for frequency in store.domain(path):
        state = site_state(store, site, gaps, tentative=(path, frequency))
        best = max(best, site_headroom(store, state, strategy))
        if best >= bound:
            return bound
    return best


def disp_upper_bound(store, instance, strategy, gaps=None):
    """
    :return: int - optimistic solution_disp of any completion of the store
    """
    gaps = gaps or GapParams.from_settings()
    return sum(
        site_bound(store, site.id, strategy, gaps)
        for site in instance.sites
    )
