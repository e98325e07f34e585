import logging
from collections import namedtuple
from dataclasses import dataclass

import numpy as np
from celery import group as celery_group

from fapk.pkg.bench.generator import ScenarioParams, generate_instance
from fapk.pkg.bench.settings import INSTANCES_PER_GROUP
from fapk.pkg.bench.tasks import solve_run
from fapk.pkg.model.fileformat import write_instance
from fapk.pkg.search.choices import SearchMode, Strategy
from fapk.pkg.search.config import SearchConfig

logger = logging.getLogger(__name__)

BenchInstance = namedtuple('BenchInstance', 'group seed instance')
SummaryRow = namedtuple('SummaryRow', 'budget mode strategy mean_links')
TrendDeviation = namedtuple(
    'TrendDeviation', 'group budget mode async_links sync_links seeds')


@dataclass(frozen=True)
class ResultRow(object):
    """Aggregate of the runs of one (budget, group, mode, strategy) cell."""
    group: str
    n: int
    mode: str
    strategy: str
    budget: float
    mean_links: float
    solved: int
    blockages: float
    filtered: float
    elapsed: float
    runs: int = 0
    errors: int = 0
    seeds: tuple = ()


def _mean(values):
    return round(float(np.mean(values)), 3) if values else 0.0


def build_instances(groups, per_group=None, seed=0, **overrides):
    """
    :param groups: iterable of ScenarioGroup
    :param per_group: instances per group, the group default when None
    :param seed: seed of the first instance of every group
    :return: list of BenchInstance
    """
    instances = []
    for group in groups:
        count = per_group or INSTANCES_PER_GROUP[group]
        base = ScenarioParams.for_group(group, seed=seed, **overrides)
        for offset in range(count):
            params = base.with_seed(seed + offset)
            instances.append(BenchInstance(
                str(group), params.seed, generate_instance(params)))
    return instances


class ResultTable(object):

    def __init__(self, rows=(), failures=()):
        self.rows = list(rows)
        self.failures = list(failures)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    @property
    def budgets(self):
        return list(dict.fromkeys(row.budget for row in self.rows))

    @property
    def groups(self):
        return list(dict.fromkeys(row.group for row in self.rows))

    @property
    def settings_columns(self):
        """(mode, strategy) pairs in run order"""
        return list(dict.fromkeys(
            (row.mode, row.strategy) for row in self.rows))

    def row(self, budget, group, mode, strategy):
        for row in self.rows:
            if (row.budget, row.group, row.mode, row.strategy) == \
                    (budget, group, str(mode), str(strategy)):
                return row
        return None

    def summary(self):
        """
        Global mean of the per-group mean links, per budget and setting.
        :return: list of SummaryRow
        """
        summary = []
        for budget in self.budgets:
            for mode, strategy in self.settings_columns:
                values = [row.mean_links for row in self.rows
                          if row.budget == budget and row.mode == mode and
                          row.strategy == strategy]
                summary.append(SummaryRow(
                    budget, mode, strategy, _mean(values)))
        return summary

    def trend_deviations(self):
        """
        At the shortest budget asynchronous rows are expected to assign at
        least as many links as synchronous av-filt rows. Deviations are
        logged, never raised.
        :return: list of TrendDeviation
        """
        budgets = [b for b in self.budgets if b is not None]
        if not budgets:
            return []
        budget = min(budgets)
        deviations = []
        for group in self.groups:
            reference = self.row(
                budget, group, SearchMode.AvFilt, Strategy.Sync)
            if reference is None:
                continue
            for row in self.rows:
                if row.budget != budget or row.group != group or \
                        row.strategy != str(Strategy.Async):
                    continue
                if row.mean_links < reference.mean_links:
                    deviation = TrendDeviation(
                        group, budget, row.mode, row.mean_links,
                        reference.mean_links, row.seeds)
                    logger.warning(
                        'Trend deviation in %s at %ss: async %s %.3f < sync '
                        'av-filt %.3f (seeds %s)', group, budget, row.mode,
                        row.mean_links, reference.mean_links,
                        ','.join(str(s) for s in row.seeds))
                    deviations.append(deviation)
        return deviations

    def budget_regressions(self):
        """
        Rows whose mean links drop when the budget grows.
        :return: list of (shorter row, longer row)
        """
        budgets = sorted(b for b in self.budgets if b is not None)
        regressions = []
        for shorter, longer in zip(budgets, budgets[1:]):
            for row in self.rows:
                if row.budget != shorter:
                    continue
                other = self.row(longer, row.group, row.mode, row.strategy)
                if other is not None and other.mean_links < row.mean_links:
                    logger.warning(
                        'Mean links of %s %s/%s fell from %.3f at %ss to '
                        '%.3f at %ss (seeds %s)', row.group, row.mode,
                        row.strategy, row.mean_links, shorter,
                        other.mean_links, longer,
                        ','.join(str(s) for s in row.seeds))
                    regressions.append((row, other))
        return regressions


def aggregate(cells, runs):
    """
    :param cells: list of (budget, group, mode, strategy), one per run
    :param runs: run dicts returned by solve_run, same order as `cells`
    :return: ResultTable
    """
    buckets = {}
    for cell, run in zip(cells, runs):
        buckets.setdefault(cell, []).append(run)

    rows, failures = [], []
    for (budget, group, mode, strategy), items in buckets.items():
        ok = [run for run in items if run['error'] is None]
        failures.extend(run for run in items if run['error'] is not None)
        sizes = [run['n'] for run in items if run['n'] is not None]
        rows.append(ResultRow(
            group=group,
            n=max(sizes) if sizes else None,
            mode=str(mode),
            strategy=str(strategy),
            budget=budget,
            mean_links=_mean([run['assigned_links'] for run in ok]),
            solved=sum(1 for run in ok if run['solved']),
            blockages=_mean([run['blockages'] for run in ok]),
            filtered=_mean([run['filtered'] for run in ok]),
            elapsed=_mean([run['elapsed'] for run in ok]),
            runs=len(items),
            errors=len(items) - len(ok),
            seeds=tuple(run['seed'] for run in items),
        ))
    return ResultTable(rows, failures)


def run_matrix(instances, budgets, modes, strategies, seed=None, cart8=True):
    """
    Solve every instance under every budget, mode and strategy, one Celery
    task per run.
    :param instances: iterable of BenchInstance
    :param budgets: iterable of seconds, None for unlimited
    :param modes: iterable of SearchMode
    :param strategies: iterable of Strategy
    :param seed: tie-breaking seed passed to every search
    :param cart8: bool - Cart8 preprocessing
    :return: ResultTable
    """
    instances = list(instances)
    texts = [write_instance(item.instance) for item in instances]
    cells, signatures = [], []
    for budget in budgets:
        for item, text in zip(instances, texts):
            for mode in modes:
                for strategy in strategies:
                    config = SearchConfig.from_settings(
                        mode=mode, strategy=strategy, budget=budget,
                        cart8=cart8, seed=seed)
                    cells.append(
                        (budget, item.group, str(config.mode),
                         str(config.strategy)))
                    signatures.append(solve_run.s(
                        text, config.to_dict(), item.group, item.seed))

    logger.info('Running %d searches over %d instances', len(signatures),
                len(instances))
    runs = []
    if signatures:
        runs = celery_group(signatures).apply_async().get(
            disable_sync_subtasks=False)
    table = aggregate(cells, runs)
    for failure in table.failures:
        logger.error('Failed run: %s', failure)
    table.trend_deviations()
    table.budget_regressions()
    return table
