"""
Branch&Bound with chronological backtracking.

The recursive procedure (label `sol` for complete assignments, `next` for
the value loop, `bktk` for backtracking) runs as an explicit-stack loop:
one depth per path of the visit order, one ordered value list per depth,
and a per-path `reconsider` index holding the 1-based position of the last
value branched on, so a node re-entered after backtracking resumes right
after it.
"""
import logging
import time
from dataclasses import dataclass, field

from numpy.random import RandomState

from fapk.pkg.availability.filters import availability_filter
from fapk.pkg.availability.scoring import disp_upper_bound, solution_disp
from fapk.pkg.availability.site import SiteState
from fapk.pkg.model.choices import Direction
from fapk.pkg.preprocess.cart8 import cart8_reduce
from fapk.pkg.propagation.store import DomainStore
from fapk.pkg.search.choices import StopReason
from fapk.pkg.search.ordering import order_values, order_variables

logger = logging.getLogger(__name__)


@dataclass
class SearchResult(object):
    link_count: int
    assigned_links: int = 0
    assignment: dict = field(default_factory=dict)
    blockages: int = 0
    best_disp: int = None
    nodes: int = 0
    backtracks: int = 0
    filtered: int = 0
    filtered_sites: int = 0
    solutions: int = 0
    elapsed: float = 0.0
    stop_reason: StopReason = StopReason.Exhausted
    cart8_warnings: int = 0

    @property
    def solved(self):
        return self.assigned_links == self.link_count


class SearchState(object):
    """Mutable state of one search, never shared between searches."""

    def __init__(self, instance, config, order=None, deadline=None):
        self.instance = instance
        self.config = config
        self.store = DomainStore(instance)
        self.order = list(order_variables(instance) if order is None
                          else order)
        self.gaps = config.gaps_for(instance)
        self.random_state = (RandomState(config.seed)
                             if config.seed is not None else None)
        self.deadline = deadline

        self.depth = 0
        self.reconsider = [0] * instance.path_count
        self.values = [None] * len(self.order)
        self.branched = [False] * len(self.order)
        # best_disp the bound of each open node was last compared with
        self.checked_disp = [None] * len(self.order)
        self.complete_links = 0

        self.incumbent = {}
        self.incumbent_links = 0
        self.best_disp = None
        self.root_bound = None
        self.blockages = 0
        self.nodes = 0
        self.backtracks = 0
        self.filtered = 0
        self.filtered_sites = 0
        self.solutions = 0

    @property
    def nb(self):
        """Number of paths assigned."""
        return self.store.assigned_count

    def out_of_time(self):
        return self.deadline is not None and time.monotonic() >= self.deadline

    def assign(self, path, frequency):
        """
        :return: bool - False when propagation or filtering emptied a domain;
        the assignment is then still on the store
        """
        success = self.store.propagate_assign(path, frequency)
        if self.store.is_assigned(path ^ 1):
            self.complete_links += 1
        if success and self.config.mode.uses_filter:
            success = self._filter(path)
        return success

    def unassign(self, path):
        if self.store.is_assigned(path ^ 1):
            self.complete_links -= 1
        self.store.propagate_unassign(path)

    def _filter(self, path):
        info = self.instance.paths[path]
        for site in (info.transmitter, info.receiver):
            state = SiteState.from_store(self.store, site, self.gaps)
            for direction in (Direction.Tx, Direction.Rx):
                before = len(self.store.site_domain(site, direction))
                removed = availability_filter(
                    self.store, state, direction, source=path)
                self.filtered += len(removed)
                self.filtered_sites += \
                    before - len(self.store.site_domain(site, direction))
                if any(self.store.domain_size(p) == 0 for p, _ in removed):
                    return False
        return True

    def record_partial(self):
        if self.complete_links > self.incumbent_links:
            self.incumbent = self.store.assignments()
            self.incumbent_links = self.complete_links
            logger.debug('New incumbent: %d links', self.incumbent_links)

    def save_sol(self):
        """
        Store the complete assignment. Under av-obj it replaces the
        incumbent only when it leaves more availability.
        """
        disp = solution_disp(
            self.store, self.instance, self.config.strategy, self.gaps)
        self.solutions += 1
        if not self.config.mode.uses_objective:
            if self.best_disp is None:
                self.incumbent = self.store.assignments()
                self.incumbent_links = self.complete_links
                self.best_disp = disp
            return
        if self.best_disp is None or disp > self.best_disp:
            self.incumbent = self.store.assignments()
            self.incumbent_links = self.complete_links
            self.best_disp = disp
            logger.debug('Better solution: disp=%d', disp)

    def upper_bound(self):
        return disp_upper_bound(
            self.store, self.instance, self.config.strategy, self.gaps)

    def can_prune(self):
        if not self.config.mode.uses_objective or self.best_disp is None:
            return False
        return self.upper_bound() <= self.best_disp

    def should_recheck(self, depth):
        """
        True when the incumbent improved since the node at `depth` was last
        compared with it.
        """
        if self.checked_disp[depth] == self.best_disp:
            return False
        self.checked_disp[depth] = self.best_disp
        return True

    def is_optimal(self):
        """No completion of the empty store can leave more availability."""
        return (self.config.mode.uses_objective and
                self.best_disp is not None and
                self.root_bound is not None and
                self.best_disp >= self.root_bound)


class BranchAndBound(object):

    def __init__(self, instance, config):
        """

        :param instance: Instance - preprocessing already applied
        :param config: SearchConfig
        """
        self.instance = instance
        self.config = config

    def run(self):
        """
        :return: SearchResult
        """
        started = time.monotonic()
        deadline = (started + self.config.budget
                    if self.config.budget is not None else None)
        state = SearchState(self.instance, self.config, deadline=deadline)
        if self.config.mode.uses_objective:
            state.root_bound = state.upper_bound()
        logger.info('Search started: %d links, mode=%s, strategy=%s, '
                    'budget=%s', self.instance.link_count, self.config.mode,
                    self.config.strategy, self.config.budget)

        if state.order:
            stop_reason = self._search(state)
        else:
            state.save_sol()
            stop_reason = StopReason.Solved

        result = SearchResult(
            link_count=self.instance.link_count,
            assigned_links=state.incumbent_links,
            assignment=dict(state.incumbent),
            blockages=state.blockages,
            best_disp=state.best_disp,
            nodes=state.nodes,
            backtracks=state.backtracks,
            filtered=state.filtered,
            filtered_sites=state.filtered_sites,
            solutions=state.solutions,
            elapsed=time.monotonic() - started,
            stop_reason=stop_reason,
        )
        logger.info('Search finished (%s): %d/%d links, %d blockages, '
                    '%d nodes, %d filtered, %.2fs', result.stop_reason,
                    result.assigned_links, result.link_count,
                    result.blockages, result.nodes, result.filtered,
                    result.elapsed)
        return result

    def _search(self, state):
        store = state.store
        total = len(state.order)
        while True:
            if state.out_of_time():
                return StopReason.Budget

            depth = state.depth
            path = state.order[depth]
            pruned = False
            if state.values[depth] is None:
                state.nodes += 1
                state.branched[depth] = False
                state.checked_disp[depth] = state.best_disp
                if state.can_prune():
                    pruned = True
                    state.values[depth] = []
                else:
                    state.values[depth] = order_values(
                        store, path, self.config.strategy, state.gaps,
                        state.random_state)
            elif state.should_recheck(depth) and state.can_prune():
                # a better incumbent closed the rest of this node
                state.values[depth] = []

            values = state.values[depth]
            descended = False
            j = state.reconsider[path] + 1
            while j <= len(values):
                frequency = values[j - 1]
                if store.is_consistent(path, frequency):
                    if state.assign(path, frequency):
                        state.reconsider[path] = j
                        state.branched[depth] = True
                        descended = True
                        break
                    state.unassign(path)
                j += 1

            if descended:
                state.record_partial()
                if state.nb == total:
                    state.save_sol()
                    if not self.config.mode.uses_objective or \
                            state.is_optimal():
                        return StopReason.Solved
                    state.unassign(path)
                else:
                    state.depth += 1
                continue

            # bktk
            if not state.branched[depth] and not pruned:
                state.blockages += 1
            state.reconsider[path] = 0
            state.values[depth] = None
            if depth == 0:
                return StopReason.Exhausted
            state.depth -= 1
            state.backtracks += 1
            state.unassign(state.order[state.depth])


def branch_and_bound(instance, config):
    """
    :param instance: Instance
    :param config: SearchConfig
    :return: SearchResult
    """
    return BranchAndBound(instance, config).run()


def solve(instance, config):
    """
    Apply the Cart8 reduction when enabled, then search.
    :return: SearchResult
    """
    warnings = 0
    if config.cart8:
        outcome = cart8_reduce(instance)
        instance, warnings = outcome.instance, len(outcome.warnings)
    result = branch_and_bound(instance, config)
    result.cart8_warnings = warnings
    return result
