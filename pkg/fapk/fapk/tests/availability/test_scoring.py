from itertools import product

from django.test import SimpleTestCase

from fapk.pkg.availability.choices import Strategy
from fapk.pkg.availability.scoring import (
    disp_upper_bound, site_bound, site_headroom, site_measure, site_state,
    solution_disp, tightest_open_path
)
from fapk.pkg.availability.site import GapParams
from fapk.tests.base import StoreMixin
from fapk.tests.utils import single_link_instance, star_instance


class TestSolutionDisp(StoreMixin, SimpleTestCase):

    def setUp(self):
        self._make_store(single_link_instance())

    def test_empty_two_site_instance(self):
        gaps = GapParams(rr=80)
        self.assertEqual(site_measure(self.store, 0, Strategy.Async, gaps),
                         24)
        self.assertEqual(
            solution_disp(self.store, self.instance, Strategy.Async, gaps),
            48)
        self.assertEqual(
            solution_disp(self.store, self.instance, Strategy.Sync, gaps),
            12)

    def test_fully_blocked_store(self):
        self._make_store(single_link_instance(domains={0: [], 1: []}))
        for strategy in Strategy:
            self.assertEqual(
                solution_disp(self.store, self.instance, strategy), 0)

    def test_assignments_lower_the_score(self):
        for strategy in Strategy:
            self._make_store(single_link_instance())
            scores = [solution_disp(self.store, self.instance, strategy)]
            self._assign_all([(0, 40000), (1, 44000)])
            scores.append(solution_disp(self.store, self.instance, strategy))
            self.assertLess(scores[1], scores[0])

    def test_tentative_assignment_leaves_store_untouched(self):
        before = self.store.snapshot()
        fresh = site_measure(self.store, 0, Strategy.Async)
        tentative = site_measure(self.store, 0, Strategy.Async,
                                 tentative=(0, 40000))
        self.assertLess(tentative, fresh)
        self.assertEqual(self.store.snapshot(), before)

    def test_upper_bound_covers_a_completion(self):
        bound = disp_upper_bound(self.store, self.instance, Strategy.Async)
        self._assign_all([(0, 40000), (1, 44000)])
        self.assertLessEqual(
            solution_disp(self.store, self.instance, Strategy.Async), bound)


class TestUpperBound(StoreMixin, SimpleTestCase):

    def _completions(self, paths):
        """Yield once per consistent assignment of `paths`, in order."""
        if not paths:
            yield
            return
        path, rest = paths[0], paths[1:]
        for frequency in self.store.domain(path):
            if self.store.propagate_assign(path, frequency):
                yield from self._completions(rest)
            self.store.propagate_unassign(path)

    def _assert_bound_covers_completions(self, strategy, gaps):
        bound = disp_upper_bound(self.store, self.instance, strategy, gaps)
        open_paths = [p for p in range(self.instance.path_count)
                      if not self.store.is_assigned(p)]
        seen = 0
        for _ in self._completions(open_paths):
            seen += 1
            self.assertLessEqual(
                solution_disp(self.store, self.instance, strategy, gaps),
                bound, strategy)
        self.assertGreater(seen, 0)

    def test_covers_every_completion(self):
        gaps = GapParams(rr=60)
        for strategy in Strategy:
            self._make_store(single_link_instance())
            self._assert_bound_covers_completions(strategy, gaps)
            self._make_store(star_instance(2))
            self._assign_all([(0, 40000), (1, 44000)])
            self._assert_bound_covers_completions(strategy, gaps)

    def test_look_ahead_never_loosens_the_headroom(self):
        gaps = GapParams(rr=60)
        self._make_store(star_instance(2))
        self._assign_all([(0, 40000)])
        for strategy, site in product(Strategy, range(3)):
            state = site_state(self.store, site, gaps)
            self.assertLessEqual(
                site_bound(self.store, site, strategy, gaps),
                site_headroom(self.store, state, strategy))

    def test_empty_domain_closes_the_site(self):
        self._make_store(single_link_instance(domains={0: []}))
        self.assertEqual(tightest_open_path(self.store, 0), 0)
        for strategy in Strategy:
            self.assertEqual(
                site_bound(self.store, 0, strategy, GapParams()), 0)

    def test_assigned_site_has_no_open_path(self):
        self._make_store(single_link_instance())
        self._assign_all([(0, 40000), (1, 44000)])
        self.assertIsNone(tightest_open_path(self.store, 0))
        for strategy in Strategy:
            self.assertEqual(
                site_bound(self.store, 0, strategy, GapParams()),
                site_measure(self.store, 0, strategy, GapParams()))
