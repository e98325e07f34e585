"""
Random scenarios shaped after the published statistics of the private
benchmark groups: link and site counts, Cart8 sites, full co-site records
and a sprinkling of far-field records between non-adjacent links.
"""
import logging
from dataclasses import dataclass, replace
from itertools import combinations

import numpy as np
from django.conf import settings

from fapk.pkg.bench.choices import ScenarioGroup
from fapk.pkg.bench.settings import (
    EDGE_SAMPLING_ATTEMPTS, FAR_FIELD_GAP_FLOOR, GROUP_SIZES, MAX_CONSTRAINTS,
    MAX_PATHS, MAX_SITES, MIN_PATHS, MIN_SITES, PLAIN_SITE_MAX_LINKS,
    RR_GAP_FLOOR, RR_GAP_SPREAD
)
from fapk.pkg.common.exceptions import GeneratorParamsError
from fapk.pkg.model.choices import ConstraintKind
from fapk.pkg.model.instance import HARD_GAPS, GapConstraint, Instance
from fapk.pkg.model.settings import MAX_SITE_LINKS

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScenarioParams(object):
    """
    `group` is None for custom sizes, which skip the published ranges.
    `far_field_probability` is the density knob: the chance that two links
    without a common site interfere.
    """
    links: int
    sites: int
    cart8: int = 0
    group: ScenarioGroup = None
    rr_mean: int = 60
    rr_spread: float = RR_GAP_SPREAD
    rr_cap: int = 80
    far_field_probability: float = 0.02
    far_field_cap: int = 50
    seed: int = 0

    @classmethod
    def for_group(cls, group, seed=0, **overrides):
        group = ScenarioGroup(group)
        size = GROUP_SIZES[group]
        values = dict(
            links=size.links, sites=size.sites, cart8=size.cart8, group=group,
            rr_mean=settings.FAPK_RR_GAP, rr_cap=settings.FAPK_RR_CAP,
            far_field_probability=settings.FAPK_FAR_FIELD_PROBABILITY,
            far_field_cap=settings.FAPK_FAR_FIELD_CAP, seed=seed,
        )
        values.update(overrides)
        return cls(**values)

    @classmethod
    def custom(cls, links, sites, cart8=0, seed=0, **overrides):
        return cls.for_group(ScenarioGroup.G10, seed=seed, **overrides) \
            .with_sizes(links=links, sites=sites, cart8=cart8)

    def with_seed(self, seed):
        return replace(self, seed=seed)

    def with_sizes(self, **sizes):
        """Explicit sizes leave the published ranges of the group."""
        return replace(self, group=None, **sizes)

    def validate(self):
        links, sites, cart8 = self.links, self.sites, self.cart8
        if links < 1 or sites < 2 or cart8 < 0:
            raise GeneratorParamsError(
                'Need at least one link, two sites and no negative counts')
        if cart8 and sites - cart8 < MAX_SITE_LINKS:
            raise GeneratorParamsError(
                '%d Cart8 sites need at least %d other sites'
                % (cart8, MAX_SITE_LINKS))
        if links < sites - 1:
            raise GeneratorParamsError(
                '%d links cannot connect %d sites' % (links, sites))
        if links > sites * (sites - 1) // 2:
            raise GeneratorParamsError(
                '%d sites cannot carry %d distinct links' % (sites, links))
        slots = 2 * links
        if slots < MAX_SITE_LINKS * cart8 + (sites - cart8):
            raise GeneratorParamsError(
                '%d links are too few for %d Cart8 sites among %d sites'
                % (links, cart8, sites))
        if slots > MAX_SITE_LINKS * cart8 + \
                PLAIN_SITE_MAX_LINKS * (sites - cart8):
            raise GeneratorParamsError(
                '%d links exceed the degree caps of %d sites'
                % (links, sites))
        if self.group is not None:
            if not MIN_PATHS <= 2 * links <= MAX_PATHS:
                raise GeneratorParamsError(
                    'Scenario groups have %d to %d paths'
                    % (MIN_PATHS, MAX_PATHS))
            if not MIN_SITES <= sites <= MAX_SITES:
                raise GeneratorParamsError(
                    'Scenario groups have %d to %d sites'
                    % (MIN_SITES, MAX_SITES))
        if self.rr_cap < RR_GAP_FLOOR or \
                self.far_field_cap < FAR_FIELD_GAP_FLOOR:
            raise GeneratorParamsError('Gap caps are below the sampled floors')
        if not 0 <= self.far_field_probability <= 1:
            raise GeneratorParamsError(
                'Far-field probability must lie in [0, 1]')


class ScenarioGenerator(object):

    def __init__(self, params):
        """

        :param params: ScenarioParams
        """
        params.validate()
        self.params = params
        self.rng = np.random.RandomState(params.seed)
        self.degrees = np.zeros(params.sites, dtype=int)
        self._is_cart8 = np.zeros(params.sites, dtype=bool)
        self.edges = []
        self._edge_set = set()
        self._parent = list(range(params.sites))

    def generate(self):
        """
        :return: Instance
        """
        self._place_cart8_sites()
        self._connect()
        self._fill_links()
        links = self._oriented_links()
        skeleton = Instance(self.params.sites, links, [], validate=False)
        constraints = self._co_site_constraints(skeleton)
        constraints += self._far_field_constraints(skeleton, len(constraints))
        instance = Instance(
            self.params.sites, links, constraints,
            rr_cap=self.params.rr_cap, far_field_cap=self.params.far_field_cap
        )
        logger.info('Generated %r (group=%s, seed=%s)', instance,
                    self.params.group, self.params.seed)
        return instance

    def _find(self, site):
        while self._parent[site] != site:
            self._parent[site] = self._parent[self._parent[site]]
            site = self._parent[site]
        return site

    def _add_edge(self, a, b):
        a, b = min(a, b), max(a, b)
        self.edges.append((a, b))
        self._edge_set.add((a, b))
        self.degrees[a] += 1
        self.degrees[b] += 1
        self._parent[self._find(a)] = self._find(b)

    def _has_room(self, site):
        return not self._is_cart8[site] and \
            self.degrees[site] < PLAIN_SITE_MAX_LINKS

    def _place_cart8_sites(self):
        params = self.params
        chosen = self.rng.choice(params.sites, params.cart8, replace=False)
        self._is_cart8[chosen] = True
        for centre in sorted(int(site) for site in chosen):
            order = self.rng.permutation(params.sites)
            candidates = sorted(
                (int(site) for site in order if self._has_room(site)),
                key=lambda site: self.degrees[site])
            if len(candidates) < MAX_SITE_LINKS:
                raise GeneratorParamsError(
                    'Not enough free sites around Cart8 site %d' % centre)
            for leaf in candidates[:MAX_SITE_LINKS]:
                self._add_edge(centre, leaf)

    def _connect(self):
        sites = [int(site) for site in self.rng.permutation(self.params.sites)]
        root = self._find(sites[0])
        for site in sites[1:]:
            if self._find(site) == root:
                continue
            component = [s for s in sites if self._find(s) == self._find(site)]
            inside = [s for s in component if self._has_room(s)]
            outside = [s for s in sites
                       if self._find(s) == root and self._has_room(s)]
            if not inside or not outside:
                raise GeneratorParamsError(
                    'Cannot connect site %d within the degree caps' % site)
            self._add_edge(inside[self.rng.randint(len(inside))],
                           outside[self.rng.randint(len(outside))])
            root = self._find(sites[0])
        if len(self.edges) > self.params.links:
            raise GeneratorParamsError(
                'Connecting the sites takes %d links, more than %d'
                % (len(self.edges), self.params.links))

    def _admissible(self, a, b):
        return a != b and self._has_room(a) and self._has_room(b) and \
            (min(a, b), max(a, b)) not in self._edge_set

    def _fill_links(self):
        sites = self.params.sites
        while len(self.edges) < self.params.links:
            for _ in range(EDGE_SAMPLING_ATTEMPTS):
                a, b = (int(x) for x in self.rng.randint(sites, size=2))
                if self._admissible(a, b):
                    self._add_edge(a, b)
                    break
            else:
                pairs = [pair for pair in combinations(range(sites), 2)
                         if self._admissible(*pair)]
                if not pairs:
                    raise GeneratorParamsError(
                        'No room left for link %d' % (len(self.edges) + 1))
                self._add_edge(*pairs[self.rng.randint(len(pairs))])

    def _oriented_links(self):
        order = self.rng.permutation(len(self.edges))
        flips = self.rng.rand(len(self.edges)) < 0.5
        return [
            self.edges[index][::-1] if flip else self.edges[index]
            for index, flip in zip(order, flips)
        ]

    def _rr_gap(self):
        params = self.params
        gap = self.rng.normal(params.rr_mean, params.rr_spread) \
            if params.rr_spread else params.rr_mean
        return int(np.clip(np.rint(gap), RR_GAP_FLOOR, params.rr_cap))

    def _co_site_constraints(self, skeleton):
        constraints = [
            GapConstraint(2 * link.id, 2 * link.id + 1,
                          HARD_GAPS[ConstraintKind.Duplex],
                          ConstraintKind.Duplex)
            for link in skeleton.links
        ]
        for site in skeleton.sites:
            paths = sorted(skeleton.site_paths(site.id))
            for i, j in combinations(paths, 2):
                kind = skeleton.relation(i, j)
                if kind == ConstraintKind.Duplex:
                    continue
                gap = self._rr_gap() if kind == ConstraintKind.RxRx \
                    else HARD_GAPS[kind]
                constraints.append(GapConstraint(i, j, gap, kind))
        return constraints

    def _far_field_constraints(self, skeleton, existing):
        params = self.params
        constraints = []
        room = MAX_CONSTRAINTS - existing
        for first, second in combinations(skeleton.links, 2):
            if set(first.sites) & set(second.sites):
                continue
            if self.rng.rand() >= params.far_field_probability:
                continue
            if len(constraints) + 4 > room:
                logger.warning('Far-field records capped at %d constraints',
                               MAX_CONSTRAINTS)
                break
            for i in first.paths:
                for j in second.paths:
                    gap = self.rng.randint(FAR_FIELD_GAP_FLOOR,
                                           params.far_field_cap + 1)
                    constraints.append(GapConstraint(
                        min(i, j), max(i, j), int(gap),
                        ConstraintKind.FarField))
        return constraints


def generate_instance(params):
    """
    :param params: ScenarioParams
    :return: Instance - the same for the same params and seed
    """
    return ScenarioGenerator(params).generate()
