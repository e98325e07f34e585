from collections import namedtuple

from fapk.pkg.common.exceptions import PropagationError
from fapk.pkg.model.choices import Direction

CAUSE_ASSIGN = 'assign'
CAUSE_CONFLICT = 'conflict'
CAUSE_FILTER = 'filter'

# `source` is the path whose assignment or filtering triggered the removal
Removal = namedtuple('Removal', 'path frequency cause source')
SiteRemoval = namedtuple('SiteRemoval', 'site direction frequency source')
DecisionLevel = namedtuple('DecisionLevel', 'path mark')


class DomainStore(object):
    """
    Reversible domains of one search.

    Every path keeps its surviving frequencies and its assignment; every site
    keeps the frequencies still available for transmission and reception
    (initially the union of the incident path domains of that direction).
    Removals go to a trail grouped by decision level, one level per assigned
    path, and levels are undone in chronological order only.
    """

    def __init__(self, instance):
        self.instance = instance
        self._domains = [set(domain) for domain in instance.domains]
        self._assignment = [None] * instance.path_count
        self._site_domains = {
            Direction.Tx: [
                set().union(*(instance.domains[p]
                              for p in instance.tx_paths(site.id)))
                for site in instance.sites
            ],
            Direction.Rx: [
                set().union(*(instance.domains[p]
                              for p in instance.rx_paths(site.id)))
                for site in instance.sites
            ],
        }
        self._trail = []
        self._levels = []

    def domain(self, path):
        """
        :return: sorted tuple of the surviving frequencies of `path`
        """
        return tuple(sorted(self._domains[path]))

    def domain_size(self, path):
        return len(self._domains[path])

    def site_domain(self, site, direction):
        return tuple(sorted(self._site_domains[Direction(direction)][site]))

    def assignment(self, path):
        return self._assignment[path]

    def is_assigned(self, path):
        return self._assignment[path] is not None

    @property
    def assigned_count(self):
        return len(self._levels)

    @property
    def decision_path(self):
        return self._levels[-1].path if self._levels else None

    @property
    def trail(self):
        return tuple(self._trail)

    def assignments(self):
        """
        :return: dict path -> frequency for every assigned path
        """
        return {
            path: frequency
            for path, frequency in enumerate(self._assignment)
            if frequency is not None
        }

    def snapshot(self):
        """Hashable image of the whole store, for equality checks."""
        return (
            tuple(frozenset(domain) for domain in self._domains),
            tuple(self._assignment),
            tuple(
                tuple(frozenset(domain) for domain in self._site_domains[d])
                for d in (Direction.Tx, Direction.Rx)
            ),
            len(self._trail),
            tuple(self._levels),
        )

    def is_consistent(self, path, frequency):
        return frequency in self._domains[path]

    def remove(self, path, frequency, cause, source):
        self._domains[path].discard(frequency)
        self._trail.append(Removal(path, frequency, cause, source))

    def remove_site_frequency(self, site, direction, frequency, source):
        self._site_domains[Direction(direction)][site].discard(frequency)
        self._trail.append(SiteRemoval(site, direction, frequency, source))

    def propagate_assign(self, path, frequency):
        """
        Assign `frequency` to `path` and remove from every unassigned
        neighbour the values closer than the constraint gap.
        Removals stay on the trail when the call fails; the caller undoes
        them with propagate_unassign.
        :param path: int
        :param frequency: int
        :return: bool - False when some neighbour domain became empty
        """
        if self._assignment[path] is not None:
            raise PropagationError('Path %d is already assigned' % path)
        if frequency not in self._domains[path]:
            raise PropagationError(
                'Frequency %d is not in the domain of path %d'
                % (frequency, path))

        self._levels.append(DecisionLevel(path, len(self._trail)))
        self._assignment[path] = frequency
        for other in sorted(self._domains[path]):
            if other != frequency:
                self.remove(path, other, CAUSE_ASSIGN, path)

        success = True
        for neighbour, gap in self.instance.neighbours(path):
            if self._assignment[neighbour] is not None:
                continue
            domain = self._domains[neighbour]
            for value in sorted(domain):
                if abs(value - frequency) < gap:
                    self.remove(neighbour, value, CAUSE_CONFLICT, path)
            if not domain:
                success = False
        return success

    def propagate_unassign(self, path):
        """
        Undo the most recent assignment and every removal trailed with it.
        :param path: int - must be the most recently assigned path
        """
        if not self._levels or self._levels[-1].path != path:
            raise PropagationError(
                'Path %s is not the latest decision (latest: %s)'
                % (path, self.decision_path))
        level = self._levels.pop()
        while len(self._trail) > level.mark:
            entry = self._trail.pop()
            if isinstance(entry, Removal):
                self._domains[entry.path].add(entry.frequency)
            else:
                self._site_domains[Direction(entry.direction)][
                    entry.site].add(entry.frequency)
        self._assignment[path] = None

    def conflicts_empty_neighbour(self, path, frequency):
        """
        One-level look-ahead: would assigning `frequency` to `path` empty
        the domain of an unassigned neighbour? The store is not modified.
        """
        for neighbour, gap in self.instance.neighbours(path):
            if self._assignment[neighbour] is not None:
                continue
            domain = self._domains[neighbour]
            if domain and all(abs(v - frequency) < gap for v in domain):
                return True
        return False
