"""
Exhaustive availability counts, used as the reference for capacity.py.
Both searches enumerate frequency subsets depth-first and only cut branches
that provably cannot beat the best count found so far.
"""
from django.conf import settings

from fapk.pkg.availability.capacity import rx_candidates, tx_candidates
from fapk.pkg.availability.choices import Strategy
from fapk.pkg.common.exceptions import OracleLimitError


def oracle_disp(state, domain, mode, rx_domain=None):
    """
    :param state: SiteState
    :param domain: candidate frequencies, at most FAPK_ORACLE_MAX_DOMAIN
    :param mode: Strategy - async returns (dispE*, dispR*), sync dispC*
    :param rx_domain: receiver candidates, `domain` when omitted
    """
    rx_domain = domain if rx_domain is None else rx_domain
    limit = settings.FAPK_ORACLE_MAX_DOMAIN
    if len(set(domain)) > limit or len(set(rx_domain)) > limit:
        raise OracleLimitError(
            'Exhaustive enumeration is limited to %d frequencies' % limit)

    tx = tx_candidates(state, domain)
    rx = rx_candidates(state, rx_domain)
    if Strategy(mode) == Strategy.Async:
        return (largest_spaced_subset(tx, state.gaps.tt),
                largest_spaced_subset(rx, state.gaps.rr))
    return largest_pairing(tx, rx, state.gaps)


def largest_spaced_subset(frequencies, gap):
    points = tuple(sorted(frequencies))
    best = [0]

    def visit(index, chosen):
        if len(chosen) + len(points) - index <= best[0]:
            return
        if index == len(points):
            best[0] = len(chosen)
            return
        f = points[index]
        if all(abs(f - c) >= gap for c in chosen):
            visit(index + 1, chosen + (f,))
        visit(index + 1, chosen)

    visit(0, ())
    return best[0]


def _spacing_bound(frequencies, gap):
    count, last = 0, None
    for f in frequencies:
        if last is None or f - last >= gap:
            count, last = count + 1, f
    return count


def matching_size(xs, ys, gap):
    """
    Maximum matching between transmitters and receivers, an edge joining
    x and y when |x - y| >= gap (augmenting paths).
    """
    match = {}

    def augment(x, seen):
        for y in ys:
            if abs(x - y) >= gap and y not in seen:
                seen.add(y)
                if y not in match or augment(match[y], seen):
                    match[y] = x
                    return True
        return False

    return sum(1 for x in xs if augment(x, set()))


def largest_pairing(tx, rx, gaps):
    """
    :return: largest k with k transmitters and k receivers that respect
    every co-site gap and pair up one to one at duplex distance
    """
    points = sorted(set(tx) | set(rx))
    tx_set, rx_set = set(tx), set(rx)
    best = [0]

    def fits_tx(f, xs, ys):
        return f in tx_set and all(abs(f - x) >= gaps.tt for x in xs) and \
            all(abs(f - y) >= gaps.tr for y in ys)

    def fits_rx(f, xs, ys):
        return f in rx_set and all(abs(f - x) >= gaps.tr for x in xs) and \
            all(abs(f - y) >= gaps.rr for y in ys)

    closest = min(gaps.tt, gaps.tr, gaps.rr)

    def bound(index, xs, ys):
        rest = points[index:]
        tx_rest = [f for f in rest if fits_tx(f, xs, ys)]
        rx_rest = [f for f in rest if fits_rx(f, xs, ys)]
        # any two new roles are at least `closest` apart
        more_roles = _spacing_bound(sorted(set(tx_rest) | set(rx_rest)),
                                    closest)
        return min(len(xs) + _spacing_bound(tx_rest, gaps.tt),
                   len(ys) + _spacing_bound(rx_rest, gaps.rr),
                   (len(xs) + len(ys) + more_roles) // 2)

    def visit(index, xs, ys):
        if bound(index, xs, ys) <= best[0]:
            return
        if index == len(points):
            best[0] = max(best[0], matching_size(xs, ys, gaps.duplex))
            return
        f = points[index]
        if fits_tx(f, xs, ys):
            visit(index + 1, xs + (f,), ys)
        if fits_rx(f, xs, ys):
            visit(index + 1, xs, ys + (f,))
        visit(index + 1, xs, ys)

    visit(0, (), ())
    return best[0]
