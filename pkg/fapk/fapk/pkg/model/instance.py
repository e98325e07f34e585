from dataclasses import dataclass
from itertools import combinations

from django.conf import settings

from fapk.pkg.common.exceptions import InstanceValidationError
from fapk.pkg.model.choices import ConstraintKind
from fapk.pkg.model.domain import rita_domain
from fapk.pkg.model.settings import (
    DUPLEX_GAP, TX_RX_GAP, TX_TX_GAP, MAX_SITE_LINKS
)

HARD_GAPS = {
    ConstraintKind.Duplex: DUPLEX_GAP,
    ConstraintKind.TxRx: TX_RX_GAP,
    ConstraintKind.TxTx: TX_TX_GAP,
}


@dataclass(frozen=True)
class Site(object):
    id: int
    links: tuple

    @property
    def degree(self):
        return len(self.links)

    @property
    def is_cart8(self):
        return self.degree == MAX_SITE_LINKS


@dataclass(frozen=True)
class Link(object):
    id: int
    sites: tuple

    @property
    def paths(self):
        return 2 * self.id, 2 * self.id + 1


@dataclass(frozen=True)
class Path(object):
    id: int
    transmitter: int
    receiver: int
    link: int

    @property
    def sibling(self):
        return self.id ^ 1


@dataclass(frozen=True, order=True)
class GapConstraint(object):
    i: int
    j: int
    gap: int
    kind: ConstraintKind

    def other(self, path):
        return self.j if path == self.i else self.i


class Instance(object):
    """
    Immutable FAP instance: sites, links, the two paths of every link,
    the explicit gap constraint list and one frequency domain per path.

    Link `l` between sites (a, b) owns path 2l (a -> b) and 2l+1 (b -> a).
    A pair of paths without a constraint record has gap 0.
    """

    def __init__(self, site_count, links, constraints, domains=None,
                 rr_cap=None, far_field_cap=None, validate=True):
        """

        :param site_count: int
        :param links: sequence of (site_a, site_b) pairs, indexed by link id
        :param constraints: iterable of GapConstraint
        :param domains: mapping path id -> iterable of frequencies,
        overriding the RITA domain for those paths
        :param rr_cap: int or None - defaults to settings.FAPK_RR_CAP
        :param far_field_cap: int or None - settings.FAPK_FAR_FIELD_CAP
        :param validate: bool - check every invariant on construction
        """
        self.site_count = site_count
        self.rr_cap = settings.FAPK_RR_CAP if rr_cap is None else rr_cap
        self.far_field_cap = (settings.FAPK_FAR_FIELD_CAP
                              if far_field_cap is None else far_field_cap)

        self.links = tuple(
            Link(index, tuple(sites)) for index, sites in enumerate(links)
        )
        self.paths = tuple(
            path
            for link in self.links
            for path in (
                Path(2 * link.id, link.sites[0], link.sites[1], link.id),
                Path(2 * link.id + 1, link.sites[1], link.sites[0], link.id),
            )
        )
        incident = [[] for _ in range(site_count)]
        for link in self.links:
            for site in set(link.sites):
                if 0 <= site < site_count:
                    incident[site].append(link.id)
        self.sites = tuple(
            Site(index, tuple(links)) for index, links in enumerate(incident)
        )
        self.constraints = tuple(sorted(
            GapConstraint(c.i, c.j, c.gap, ConstraintKind(c.kind))
            for c in constraints
        ))

        default = rita_domain()
        overrides = {
            int(path): tuple(sorted(set(frequencies)))
            for path, frequencies in (domains or {}).items()
        }
        self._overrides = overrides
        self.domains = tuple(
            overrides.get(path.id, default) for path in self.paths
        )

        if validate:
            self.validate()
        self._build_indexes()

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return (self.site_count == other.site_count and
                self.links == other.links and
                self.constraints == other.constraints and
                self.domains == other.domains)

    def __repr__(self):
        return '<Instance sites=%d links=%d constraints=%d>' % (
            self.site_count, self.link_count, len(self.constraints))

    @property
    def link_count(self):
        return len(self.links)

    @property
    def path_count(self):
        return len(self.paths)

    @property
    def domain_overrides(self):
        """
        :return: dict path id -> domain, only for paths not on the RITA domain
        """
        default = rita_domain()
        return {
            path: domain for path, domain in enumerate(self.domains)
            if domain != default
        }

    @property
    def frequencies(self):
        """
        :return: sorted tuple of every frequency in some path domain
        """
        return tuple(sorted(set().union(*self.domains))) \
            if self.domains else ()

    def _build_indexes(self):
        neighbours = [[] for _ in self.paths]
        self._by_pair = {}
        for constraint in self.constraints:
            self._by_pair[(constraint.i, constraint.j)] = constraint
            neighbours[constraint.i].append((constraint.j, constraint.gap))
            neighbours[constraint.j].append((constraint.i, constraint.gap))
        self._neighbours = tuple(tuple(items) for items in neighbours)

        tx_paths = [[] for _ in self.sites]
        rx_paths = [[] for _ in self.sites]
        for path in self.paths:
            tx_paths[path.transmitter].append(path.id)
            rx_paths[path.receiver].append(path.id)
        self._tx_paths = tuple(tuple(paths) for paths in tx_paths)
        self._rx_paths = tuple(tuple(paths) for paths in rx_paths)

    def neighbours(self, path):
        """
        :param path: int
        :return: tuple of (neighbour path id, gap)
        """
        return self._neighbours[path]

    def constraint(self, i, j):
        if i > j:
            i, j = j, i
        return self._by_pair.get((i, j))

    def gap(self, i, j):
        constraint = self.constraint(i, j)
        return constraint.gap if constraint else 0

    def tx_paths(self, site):
        """Paths transmitting from `site`."""
        return self._tx_paths[site]

    def rx_paths(self, site):
        """Paths received at `site`."""
        return self._rx_paths[site]

    def site_paths(self, site):
        return self._tx_paths[site] + self._rx_paths[site]

    def relation(self, i, j):
        """
        Topological relation between two paths, ignoring far-field records
        :return: ConstraintKind or None
        """
        first, second = self.paths[i], self.paths[j]
        if first.link == second.link:
            return ConstraintKind.Duplex
        if first.transmitter == second.transmitter:
            return ConstraintKind.TxTx
        if (first.transmitter == second.receiver or
                first.receiver == second.transmitter):
            return ConstraintKind.TxRx
        if first.receiver == second.receiver:
            return ConstraintKind.RxRx
        return None

    def classify_pair(self, i, j):
        """
        :param i: int - path id
        :param j: int - path id
        :return: ConstraintKind or None when c_ij = 0
        """
        for path in (i, j):
            if not 0 <= path < self.path_count:
                raise ValueError('Path id %s is out of range' % path)
        if i == j:
            raise ValueError('A path is not paired with itself')
        kind = self.relation(i, j)
        if kind is not None:
            return kind
        constraint = self.constraint(i, j)
        if constraint is not None:
            return constraint.kind
        return None

    def with_domains(self, domains):
        """
        :param domains: mapping path id -> frequencies, replacing the
        current domain of those paths
        :return: Instance
        """
        merged = dict(self.domain_overrides)
        merged.update(domains)
        return Instance(
            self.site_count, [link.sites for link in self.links],
            self.constraints, merged, rr_cap=self.rr_cap,
            far_field_cap=self.far_field_cap
        )

    def validate(self):
        self._validate_links()
        self._validate_sites()
        self._validate_constraints()
        self._validate_domains()

    def _validate_links(self):
        seen = set()
        for link in self.links:
            if len(link.sites) != 2:
                raise InstanceValidationError(
                    'A link joins exactly two sites', link)
            a, b = link.sites
            if not (0 <= a < self.site_count and 0 <= b < self.site_count):
                raise InstanceValidationError('Site id out of range', link)
            if a == b:
                raise InstanceValidationError(
                    'A link must join two different sites', link)
            pair = frozenset(link.sites)
            if pair in seen:
                raise InstanceValidationError(
                    'Two sites are connected by more than one link', link)
            seen.add(pair)

    def _validate_sites(self):
        for site in self.sites:
            if not 1 <= site.degree <= MAX_SITE_LINKS:
                raise InstanceValidationError(
                    'A site must have between 1 and %d links'
                    % MAX_SITE_LINKS, site)

    def _validate_constraints(self):
        seen = set()
        for constraint in self.constraints:
            i, j = constraint.i, constraint.j
            if not 0 <= i < j < self.path_count:
                raise InstanceValidationError(
                    'Constraint paths must satisfy 0 <= i < j < %d'
                    % self.path_count, constraint)
            if (i, j) in seen:
                raise InstanceValidationError(
                    'Duplicate constraint record', constraint)
            seen.add((i, j))
            if constraint.gap < 0:
                raise InstanceValidationError(
                    'Gap must be non-negative', constraint)
            self._validate_kind(constraint)

        for i, j in self._constrained_pairs():
            if (i, j) not in seen:
                raise InstanceValidationError(
                    'Missing %s constraint record'
                    % self.relation(i, j).value, (i, j))

    def _validate_kind(self, constraint):
        kind = constraint.kind
        relation = self.relation(constraint.i, constraint.j)
        if kind == ConstraintKind.FarField:
            if relation is not None:
                raise InstanceValidationError(
                    'Far-field constraint between paths sharing a site',
                    constraint)
            if constraint.gap > self.far_field_cap:
                raise InstanceValidationError(
                    'Far-field gap exceeds %d' % self.far_field_cap,
                    constraint)
            return
        if kind != relation:
            raise InstanceValidationError(
                'Constraint kind does not match path topology (%s)'
                % (relation.value if relation else 'none'), constraint)
        if kind in HARD_GAPS and constraint.gap != HARD_GAPS[kind]:
            raise InstanceValidationError(
                '%s constraint requires gap %d'
                % (kind.value, HARD_GAPS[kind]), constraint)
        if kind == ConstraintKind.RxRx and constraint.gap > self.rr_cap:
            raise InstanceValidationError(
                'Receiver-receiver gap exceeds %d' % self.rr_cap, constraint)

    def _constrained_pairs(self):
        """Duplex and co-site pairs, each of which needs one record."""
        pairs = set()
        for site in self.sites:
            paths = sorted(
                path for link in site.links for path in self.links[link].paths
            )
            pairs.update(combinations(paths, 2))
        return sorted(pairs)

    def _validate_domains(self):
        for path, domain in self._overrides.items():
            if not 0 <= path < self.path_count:
                raise InstanceValidationError(
                    'Domain record for unknown path', path)
            if any(not isinstance(f, int) or f < 0 for f in domain):
                raise InstanceValidationError(
                    'Frequencies must be non-negative integers',
                    (path, domain))


def cart8_sites(instance):
    """
    :param instance: Instance
    :return: list of ids of sites with exactly 8 links
    """
    return [site.id for site in instance.sites if site.is_cart8]
