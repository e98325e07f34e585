"""
Exact site availability.

Asynchronous counts are maximum spacing-constrained subsets of a sorted
candidate list, which the greedy left-to-right choice solves exactly for a
single uniform gap.

The synchronous count splits the candidates into blocks separated by at
least max(tt, tr, rr, duplex). No constraint crosses a block boundary and any
transmitter can be paired with any receiver of another block, so a choice of
per-block (tx, rx) counts (a_b, b_b) carries k pairs iff sum(a_b) >= k,
sum(b_b) >= k and a_b + b_b <= k for every block (Hall's condition).
Per-block achievable counts are enumerated role by role.
"""
from functools import lru_cache

from fapk.pkg.availability.settings import (
    CAPACITY_CACHE_SIZE, SYNC_BLOCK_LIMIT
)
from fapk.pkg.availability.site import AvailabilityReport


def disp_flags(state, domain):
    """
    :param state: SiteState
    :param domain: iterable of candidate frequencies
    :return: dict frequency -> (dispE, dispR), ascending frequency order
    """
    gaps = state.gaps
    flags = {}
    for f in sorted(set(domain)):
        tx_ok = (all(abs(f - x) >= gaps.tt for x in state.tx) and
                 all(abs(f - y) >= gaps.tr for y in state.rx))
        rx_ok = (all(abs(f - x) >= gaps.tr for x in state.tx) and
                 all(abs(f - y) >= gaps.rr for y in state.rx))
        flags[f] = (int(tx_ok), int(rx_ok))
    return flags


def tx_candidates(state, domain):
    return tuple(f for f, (tx, _) in disp_flags(state, domain).items() if tx)


def rx_candidates(state, domain):
    return tuple(f for f, (_, rx) in disp_flags(state, domain).items() if rx)


def max_spaced_subset(frequencies, gap):
    """
    :param frequencies: sorted iterable of int
    :param gap: int
    :return: tuple - a largest subset whose members are pairwise >= gap apart
    """
    chosen = []
    for f in frequencies:
        if not chosen or f - chosen[-1] >= gap:
            chosen.append(f)
    return tuple(chosen)


@lru_cache(maxsize=CAPACITY_CACHE_SIZE)
def max_spaced_count(frequencies, gap):
    return len(max_spaced_subset(frequencies, gap))


def disp_async(state, domain, rx_domain=None):
    """
    :param state: SiteState
    :param domain: candidate frequencies for new transmitters
    :param rx_domain: candidate frequencies for new receivers,
    `domain` when omitted
    :return: (dispE*, dispR*)
    """
    rx_domain = domain if rx_domain is None else rx_domain
    return (
        max_spaced_count(tx_candidates(state, domain), state.gaps.tt),
        max_spaced_count(rx_candidates(state, rx_domain), state.gaps.rr),
    )


def disp_sync(state, domain, rx_domain=None):
    """
    :param state: SiteState
    :param domain: candidate frequencies for new transmitters
    :param rx_domain: candidate frequencies for new receivers
    :return: dispC* - number of (transmitter, receiver) pairs of new links
    """
    rx_domain = domain if rx_domain is None else rx_domain
    return sync_capacity(
        tx_candidates(state, domain), rx_candidates(state, rx_domain),
        state.gaps
    )


def site_report(state, domain, rx_domain=None):
    """
    :return: AvailabilityReport
    """
    rx_domain = domain if rx_domain is None else rx_domain
    tx_count, rx_count = disp_async(state, domain, rx_domain)
    flags = disp_flags(state, set(domain) | set(rx_domain))
    tx_allowed, rx_allowed = set(domain), set(rx_domain)
    flags = {
        f: (tx if f in tx_allowed else 0, rx if f in rx_allowed else 0)
        for f, (tx, rx) in flags.items()
    }
    return AvailabilityReport(
        site=state.site, flags=flags, tx_count=tx_count, rx_count=rx_count,
        sync_count=disp_sync(state, domain, rx_domain)
    )


@lru_cache(maxsize=CAPACITY_CACHE_SIZE)
def sync_capacity(tx, rx, gaps):
    """
    :param tx: sorted tuple of available transmitter frequencies
    :param rx: sorted tuple of available receiver frequencies
    :param gaps: GapParams
    :return: int
    """
    if not tx or not rx:
        return 0
    blocks = _split_blocks(tx, rx, gaps)
    if blocks is None:
        from fapk.pkg.availability.oracle import largest_pairing
        return largest_pairing(tx, rx, gaps)

    profiles = [_block_profile(block_tx, block_rx, gaps)
                for block_tx, block_rx in blocks]
    for k in range(min(len(tx), len(rx)), 0, -1):
        if _carries_pairs(profiles, k):
            return k
    return 0


def _split_blocks(tx, rx, gaps):
    separation = max(gaps.tt, gaps.tr, gaps.rr, gaps.duplex)
    points = sorted(set(tx) | set(rx))
    groups = [[points[0]]]
    for f in points[1:]:
        if f - groups[-1][-1] >= separation:
            groups.append([f])
        else:
            groups[-1].append(f)

    tx_set, rx_set = set(tx), set(rx)
    blocks = []
    for group in groups:
        if group[-1] - group[0] >= gaps.duplex or \
                len(group) > SYNC_BLOCK_LIMIT:
            return None
        blocks.append((
            tuple(f for f in group if f in tx_set),
            tuple(f for f in group if f in rx_set),
        ))
    return blocks


@lru_cache(maxsize=CAPACITY_CACHE_SIZE)
def _block_profile(block_tx, block_rx, gaps):
    """
    :return: frozenset of achievable (tx count, rx count) inside one block
    """
    points = sorted(set(block_tx) | set(block_rx))
    tx_set, rx_set = set(block_tx), set(block_rx)
    profile = set()

    def visit(index, xs, ys):
        if index == len(points):
            profile.add((len(xs), len(ys)))
            return
        f = points[index]
        visit(index + 1, xs, ys)
        if f in tx_set and all(f - x >= gaps.tt for x in xs) and \
                all(f - y >= gaps.tr for y in ys):
            visit(index + 1, xs + (f,), ys)
        if f in rx_set and all(f - x >= gaps.tr for x in xs) and \
                all(f - y >= gaps.rr for y in ys):
            visit(index + 1, xs, ys + (f,))

    visit(0, (), ())
    return frozenset(profile)


def _carries_pairs(profiles, k):
    reachable = {(0, 0)}
    for profile in profiles:
        options = [(a, b) for a, b in profile if a + b <= k]
        reachable = {
            (min(x + a, k), min(y + b, k))
            for x, y in reachable for a, b in options
        }
    return (k, k) in reachable
