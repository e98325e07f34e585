from unittest import mock

from django.test import SimpleTestCase

from fapk.pkg.bench.matrix import (
    BenchInstance, ResultRow, ResultTable, aggregate, build_instances,
    run_matrix
)
from fapk.pkg.bench.tasks import solve_run
from fapk.pkg.model.fileformat import write_instance
from fapk.pkg.search.choices import SearchMode, Strategy
from fapk.pkg.search.config import SearchConfig
from fapk.tests.utils import chain_instance, single_link_instance


def _row(budget, mode, strategy, mean_links, group='g10'):
    return ResultRow(group=group, n=50, mode=mode, strategy=strategy,
                     budget=budget, mean_links=mean_links, solved=0,
                     blockages=0.0, filtered=0.0, elapsed=1.0,
                     seeds=(1, 2))


class TestSolveRun(SimpleTestCase):

    def test_run(self):
        text = write_instance(single_link_instance())
        config = SearchConfig(mode=SearchMode.AvSel).to_dict()
        run = solve_run(text, config, 'g10', 3)
        self.assertIsNone(run['error'])
        self.assertEqual(run['n'], 1)
        self.assertEqual(run['assigned_links'], 1)
        self.assertTrue(run['solved'])
        self.assertEqual(run['seed'], 3)

    def test_failed_run_is_reported(self):
        config = SearchConfig().to_dict()
        with self.assertLogs('fapk.pkg.bench.tasks', 'ERROR'):
            run = solve_run('not an instance', config, 'g10', 3)
        self.assertIsNotNone(run['error'])
        self.assertEqual(run['assigned_links'], 0)
        self.assertFalse(run['solved'])

    @mock.patch('fapk.pkg.bench.tasks.solve', side_effect=RuntimeError('boom'))
    def test_search_crash_is_reported(self, solve):
        text = write_instance(single_link_instance())
        with self.assertLogs('fapk.pkg.bench.tasks', 'ERROR'):
            run = solve_run(text, SearchConfig().to_dict(), 'g10', 3)
        self.assertEqual(run['error'], 'boom')
        self.assertEqual(run['n'], 1)


class TestRunMatrix(SimpleTestCase):

    def setUp(self):
        self.instances = [
            BenchInstance(group, 0, single_link_instance())
            for group in ('g01', 'g10', 'g20', 'g30')
        ]

    def test_cardinality(self):
        table = run_matrix(self.instances, [0.2], list(SearchMode),
                           list(Strategy))
        self.assertEqual(len(table), 24)
        self.assertEqual(table.budgets, [0.2])
        self.assertEqual(table.groups, ['g01', 'g10', 'g20', 'g30'])
        self.assertEqual(len(table.settings_columns), 6)
        self.assertEqual(table.failures, [])

    def test_single_link_group(self):
        table = run_matrix(self.instances[:1], [0.2], list(SearchMode),
                           [Strategy.Async])
        for row in table:
            self.assertEqual(row.mean_links, 1.0)
            self.assertEqual(row.solved, 1)
            self.assertEqual(row.n, 1)
            self.assertEqual(row.runs, 1)
        for mode in (SearchMode.AvSel, SearchMode.AvObj):
            row = table.row(0.2, 'g01', mode, Strategy.Async)
            self.assertEqual(row.filtered, 0.0)

    def test_group_means(self):
        instances = [BenchInstance('g10', 0, single_link_instance()),
                     BenchInstance('g10', 1, chain_instance(2))]
        table = run_matrix(instances, [None], [SearchMode.AvSel],
                           [Strategy.Sync])
        row = table.row(None, 'g10', SearchMode.AvSel, Strategy.Sync)
        self.assertEqual(row.mean_links, 1.5)
        self.assertEqual(row.solved, 2)
        self.assertEqual(row.n, 2)
        self.assertEqual(row.seeds, (0, 1))
        summary = table.summary()
        self.assertEqual(len(summary), 1)
        self.assertEqual(summary[0].mean_links, 1.5)

    def test_empty_matrix(self):
        table = run_matrix([], [1.0], list(SearchMode), list(Strategy))
        self.assertEqual(len(table), 0)

    def test_build_instances(self):
        instances = build_instances(['g10'], per_group=2, seed=5)
        self.assertEqual([item.seed for item in instances], [5, 6])
        self.assertEqual(instances[0].group, 'g10')
        self.assertEqual(instances[1].instance.link_count, 50)


class TestResultTable(SimpleTestCase):

    def test_aggregate_counts_failures(self):
        cells = [(1.0, 'g10', 'av-sel', 'async')] * 2
        runs = [
            {'n': 4, 'assigned_links': 4, 'solved': True, 'blockages': 2,
             'filtered': 0, 'elapsed': 0.5, 'error': None, 'seed': 0},
            {'n': None, 'assigned_links': 0, 'solved': False,
             'blockages': 0, 'filtered': 0, 'elapsed': 0.0,
             'error': 'boom', 'seed': 1},
        ]
        table = aggregate(cells, runs)
        row = table.rows[0]
        self.assertEqual((row.runs, row.errors), (2, 1))
        self.assertEqual(row.mean_links, 4.0)
        self.assertEqual(row.blockages, 2.0)
        self.assertEqual(len(table.failures), 1)

    def test_trend_deviation_is_logged(self):
        table = ResultTable([
            _row(5.0, 'av-sel', 'async', 40.0),
            _row(5.0, 'av-filt', 'sync', 42.0),
            _row(60.0, 'av-sel', 'async', 30.0),
            _row(60.0, 'av-filt', 'sync', 50.0),
        ])
        with self.assertLogs('fapk.pkg.bench.matrix', 'WARNING') as logs:
            deviations = table.trend_deviations()
        self.assertEqual(len(deviations), 1)
        self.assertEqual(deviations[0].budget, 5.0)
        self.assertEqual(deviations[0].seeds, (1, 2))
        self.assertIn('1,2', logs.output[0])

    def test_budget_regression(self):
        table = ResultTable([
            _row(5.0, 'av-sel', 'async', 40.0),
            _row(60.0, 'av-sel', 'async', 30.0),
        ])
        with self.assertLogs('fapk.pkg.bench.matrix', 'WARNING'):
            regressions = table.budget_regressions()
        self.assertEqual(len(regressions), 1)
        self.assertEqual(table.trend_deviations(), [])
