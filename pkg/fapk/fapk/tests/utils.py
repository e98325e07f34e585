from itertools import combinations

import numpy as np

from fapk.pkg.availability.site import GapParams, SiteState
from fapk.pkg.model.choices import ConstraintKind
from fapk.pkg.model.domain import rita_domain
from fapk.pkg.model.instance import HARD_GAPS, GapConstraint, Instance


def co_site_constraints(site_count, links, rr_gap=60, far_field=()):
    """
    Every duplex and co-site record implied by the links, receiver pairs
    at `rr_gap`, plus the given far-field (i, j, gap) records.
    """
    skeleton = Instance(site_count, links, [], validate=False)
    constraints = [
        GapConstraint(i, j, gap, ConstraintKind.FarField)
        for i, j, gap in far_field
    ]
    pairs = set()
    for site in skeleton.sites:
        pairs.update(combinations(sorted(skeleton.site_paths(site.id)), 2))
    for i, j in sorted(pairs):
        kind = skeleton.relation(i, j)
        gap = rr_gap if kind == ConstraintKind.RxRx else HARD_GAPS[kind]
        constraints.append(GapConstraint(i, j, gap, kind))
    return constraints


def make_instance(links, site_count=None, rr_gap=60, domains=None,
                  far_field=()):
    """
    :param links: list of (site_a, site_b)
    :return: valid Instance with complete co-site records
    """
    if site_count is None:
        site_count = max(max(pair) for pair in links) + 1
    return Instance(
        site_count, links,
        co_site_constraints(site_count, links, rr_gap, far_field),
        domains,
    )


def single_link_instance(**kwargs):
    return make_instance([(0, 1)], **kwargs)


def star_instance(leaves, **kwargs):
    """Site 0 linked to sites 1..leaves."""
    return make_instance([(0, leaf) for leaf in range(1, leaves + 1)],
                         **kwargs)


def chain_instance(length, **kwargs):
    return make_instance([(k, k + 1) for k in range(length)], **kwargs)


def random_small_instance(rng, max_links=6, rr_gap=60, domain_size=None):
    """
    Connected random instance with at most `max_links` links; with
    `domain_size`, each path gets that many random RITA frequencies.
    :param rng: numpy RandomState
    """
    link_count = rng.randint(1, max_links + 1)
    site_count = rng.randint(2, link_count + 2)
    links = [(k, rng.randint(0, k)) for k in range(1, site_count)]
    candidates = [pair for pair in combinations(range(site_count), 2)
                  if (pair[1], pair[0]) not in links]
    rng.shuffle(candidates)
    links += [tuple(int(s) for s in pair)
              for pair in candidates[:link_count - len(links)]]
    links = [(int(a), int(b)) for a, b in links]

    domains = None
    if domain_size is not None:
        frequencies = rita_domain()
        domains = {
            path: sorted(int(f) for f in rng.choice(
                frequencies, domain_size, replace=False))
            for path in range(2 * len(links))
        }
    return make_instance(links, site_count=site_count, rr_gap=rr_gap,
                         domains=domains)


def random_site_state(rng, rr=None, max_assigned=4, max_domain=12):
    """
    :return: (SiteState, tx domain, rx domain) over random RITA subsets
    """
    frequencies = rita_domain()
    rr = rr or int(rng.choice([60, 70, 80]))
    assigned = rng.choice(frequencies, rng.randint(0, max_assigned + 1),
                          replace=False)
    roles = rng.rand(len(assigned)) < 0.5
    tx = tuple(sorted(int(f) for f, role in zip(assigned, roles) if role))
    rx = tuple(sorted(int(f) for f, role in zip(assigned, roles)
                      if not role))
    tx_domain = sorted(int(f) for f in rng.choice(
        frequencies, rng.randint(0, max_domain + 1), replace=False))
    rx_domain = sorted(int(f) for f in rng.choice(
        frequencies, rng.randint(0, max_domain + 1), replace=False))
    state = SiteState(site=0, tx=tx, rx=rx, gaps=GapParams(rr=rr))
    return state, tx_domain, rx_domain


def new_random_state(seed=0):
    return np.random.RandomState(seed)
