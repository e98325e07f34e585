from itertools import islice, product

from django.test import SimpleTestCase, override_settings

from fapk.pkg.availability.filters import (
    availability_filter, filter_is_active
)
from fapk.pkg.availability.scoring import site_state
from fapk.pkg.model.choices import Direction
from fapk.pkg.propagation.store import CAUSE_FILTER
from fapk.tests.base import StoreMixin
from fapk.tests.utils import (
    new_random_state, random_small_instance, single_link_instance,
    star_instance
)


class TestFilterGate(StoreMixin, SimpleTestCase):

    def test_fresh_single_link_is_not_filtered(self):
        self._make_store(single_link_instance())
        self.assertFalse(filter_is_active(self.store, 0))
        state = site_state(self.store, 0)
        self.assertEqual(
            availability_filter(self.store, state, Direction.Rx), [])
        self.assertEqual(self.store.trail, ())

    def test_half_assigned_site_is_filtered(self):
        self._make_store(single_link_instance())
        self.store.propagate_assign(0, 40000)
        self.assertTrue(filter_is_active(self.store, 0))

    @override_settings(FAPK_FILTER_MIN_LINKS=3)
    def test_degree_threshold_from_settings(self):
        self._make_store(star_instance(3))
        self.assertTrue(filter_is_active(self.store, 0))
        self.assertFalse(filter_is_active(self.store, 1))

    def test_no_open_paths(self):
        self._make_store(single_link_instance())
        self._assign_all([(0, 40000), (1, 44000)])
        state = site_state(self.store, 0)
        self.assertEqual(
            availability_filter(self.store, state, Direction.Tx), [])
        self.assertEqual(
            availability_filter(self.store, state, Direction.Rx), [])


class TestFilterRemovals(StoreMixin, SimpleTestCase):

    def setUp(self):
        # site 0 has four links; its only transmitter candidate on link 0
        # is 45070, within 220 of 45210
        self._make_store(star_instance(4, domains={0: [45070]}))

    def test_value_emptying_a_neighbour_leaves_the_site(self):
        state = site_state(self.store, 0)
        removed = availability_filter(self.store, state, Direction.Rx)
        for path in self.instance.rx_paths(0):
            self.assertIn((path, 45210), removed)
            self.assertFalse(self.store.is_consistent(path, 45210))
        self.assertNotIn(45210, self.store.site_domain(0, Direction.Rx))
        self.assertIn(41000, self.store.site_domain(0, Direction.Rx))
        self.assertEqual(self.store.domain(0), (45070,))

    def test_removals_are_trailed_with_the_source(self):
        state = site_state(self.store, 0)
        removed = availability_filter(self.store, state, 'rx', source=7)
        filtered = [entry for entry in self.store.trail
                    if getattr(entry, 'cause', None) == CAUSE_FILTER]
        self.assertEqual(len(filtered), len(removed))
        self.assertTrue(all(entry.source == 7 for entry in filtered))


def _solutions(instance):
    paths = range(instance.path_count)
    for values in product(*(instance.domains[p] for p in paths)):
        if all(abs(values[c.i] - values[c.j]) >= c.gap
               for c in instance.constraints):
            yield dict(zip(paths, values))


class TestFilterSoundness(StoreMixin, SimpleTestCase):

    def test_filter_keeps_every_solution(self):
        rng = new_random_state(9)
        checked = 0
        for _ in range(15):
            instance = random_small_instance(rng, max_links=4,
                                             domain_size=3)
            for solution in islice(_solutions(instance), 25):
                self._make_store(instance)
                path = int(rng.randint(instance.path_count))
                self.store.propagate_assign(path, solution[path])
                link = instance.links[instance.paths[path].link]
                for site in set(link.sites):
                    for direction in (Direction.Tx, Direction.Rx):
                        state = site_state(self.store, site)
                        availability_filter(self.store, state, direction)
                for other, frequency in solution.items():
                    self.assertTrue(
                        self.store.is_consistent(other, frequency))
                checked += 1
        self.assertGreater(checked, 0)
