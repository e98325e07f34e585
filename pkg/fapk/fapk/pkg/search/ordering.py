from fapk.pkg.availability.capacity import disp_async, disp_sync
from fapk.pkg.availability.site import GapParams, SiteState
from fapk.pkg.model.choices import Direction
from fapk.pkg.search.choices import Strategy


def _link_key(instance, link, cart8):
    paths = set(link.paths)
    records = sum(
        1 for c in instance.constraints if c.i in paths or c.j in paths
    )
    degree = sum(instance.sites[site].degree for site in link.sites)
    touches_cart8 = any(site in cart8 for site in link.sites)
    return not touches_cart8, -records, -degree, link.id


def order_variables(instance):
    """
    Visit order of the paths: links touching an 8-link site first, then the
    most constrained links. Both paths of a link are adjacent.
    :param instance: Instance
    :return: list of path ids
    """
    cart8 = {site.id for site in instance.sites if site.is_cart8}
    links = sorted(
        instance.links, key=lambda link: _link_key(instance, link, cart8))
    return [path for link in links for path in link.paths]


def _site_score(store, path, frequency, site, strategy, gaps):
    """
    :return: availability left at `site` once `path` takes `frequency`,
    or None when it is smaller than what the open paths there still need
    """
    state = SiteState.from_store(store, site, gaps, (path, frequency))
    tx_domain = store.site_domain(site, Direction.Tx)
    rx_domain = store.site_domain(site, Direction.Rx)
    if strategy == Strategy.Async:
        tx_count, rx_count = disp_async(state, tx_domain, rx_domain)
        if tx_count < state.unassigned_tx or rx_count < state.unassigned_rx:
            return None
        return tx_count + rx_count
    pairs = disp_sync(state, tx_domain, rx_domain)
    if pairs < state.unassigned_links:
        return None
    return pairs


def order_values(store, path, strategy, gaps=None, random_state=None):
    """
    Candidate frequencies of `path`, best availability of its two sites first.

    :param store: DomainStore
    :param path: int - the path about to be branched on
    :param strategy: Strategy
    :param gaps: GapParams or None for the configured gaps
    :param random_state: numpy RandomState shuffling equal scores, ascending
    frequency breaks them otherwise
    :return: list of int
    """
    strategy = Strategy(strategy)
    gaps = gaps or GapParams.from_settings()
    sites = (store.instance.paths[path].transmitter,
             store.instance.paths[path].receiver)

    scored = []
    for frequency in store.domain(path):
        total = 0
        for site in sites:
            score = _site_score(store, path, frequency, site, strategy, gaps)
            if score is None:
                break
            total += score
        else:
            scored.append((total, frequency))

    if random_state is not None and scored:
        draws = random_state.random_sample(len(scored))
        ranked = sorted(zip(scored, draws), key=lambda x: (-x[0][0], x[1]))
        return [frequency for (_, frequency), _ in ranked]
    return [frequency for _, frequency in
            sorted(scored, key=lambda item: (-item[0], item[1]))]
