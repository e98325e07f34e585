from django.test import SimpleTestCase

from fapk.pkg.availability.capacity import (
    disp_async, disp_flags, disp_sync, max_spaced_subset, site_report,
    sync_capacity
)
from fapk.pkg.availability.oracle import largest_pairing
from fapk.pkg.availability.site import GapParams, SiteState
from fapk.pkg.model.domain import rita_domain
from fapk.tests.utils import new_random_state, random_site_state

RITA = rita_domain()


def _empty_site(rr=60, **gaps):
    return SiteState(site=0, gaps=GapParams(rr=rr, **gaps))


class TestDispFlags(SimpleTestCase):

    def test_empty_site_allows_everything(self):
        flags = disp_flags(_empty_site(), RITA)
        self.assertEqual(list(flags), list(RITA))
        self.assertTrue(all(flag == (1, 1) for flag in flags.values()))

    def test_assigned_transmitter(self):
        state = SiteState(site=0, tx=(40000,))
        flags = disp_flags(state, RITA)
        self.assertEqual(flags[40070][0], 0)
        self.assertEqual(flags[40140][0], 1)
        self.assertEqual(flags[40140][1], 0)
        self.assertEqual(flags[41000][1], 1)

    def test_assigned_receiver(self):
        state = SiteState(site=0, rx=(44000,), gaps=GapParams(rr=80))
        flags = disp_flags(state, (44070, 44140, 44210))
        self.assertEqual(flags, {44070: (0, 0), 44140: (0, 1),
                                 44210: (0, 1)})


class TestDispAsync(SimpleTestCase):

    def test_empty_site_two_per_ipe(self):
        self.assertEqual(disp_async(_empty_site(rr=80), RITA), (12, 12))

    def test_receivers_at_60_take_every_value(self):
        self.assertEqual(disp_async(_empty_site(rr=60), RITA)[1], 20)

    def test_empty_domain(self):
        self.assertEqual(disp_async(_empty_site(), ()), (0, 0))

    def test_separate_receiver_domain(self):
        state = _empty_site()
        self.assertEqual(
            disp_async(state, (40000, 40070), (45000, 45070, 45140)), (1, 3))

    def test_greedy_subset(self):
        self.assertEqual(max_spaced_subset((44000, 44070, 44140, 44210), 100),
                         (44000, 44140))
        self.assertEqual(max_spaced_subset((), 100), ())

    def test_assignments_only_lower_the_count(self):
        rng = new_random_state(11)
        for _ in range(100):
            state, tx_domain, rx_domain = random_site_state(rng)
            before = disp_async(state, tx_domain, rx_domain)
            f = int(rng.choice(RITA))
            after = disp_async(SiteState(site=0, tx=state.tx + (f,),
                                         rx=state.rx, gaps=state.gaps),
                               tx_domain, rx_domain)
            self.assertLessEqual(after[0], before[0])
            self.assertLessEqual(after[1], before[1])


class TestDispSync(SimpleTestCase):

    def test_empty_site_rr_60(self):
        self.assertEqual(disp_sync(_empty_site(rr=60), RITA), 8)

    def test_empty_site_rr_80(self):
        self.assertEqual(disp_sync(_empty_site(rr=80), RITA), 6)

    def test_empty_domain(self):
        self.assertEqual(disp_sync(_empty_site(), ()), 0)
        self.assertEqual(disp_sync(_empty_site(), RITA, ()), 0)

    def test_single_block_cannot_pair(self):
        # every pair inside one IPE is closer than the duplex gap
        self.assertEqual(disp_sync(_empty_site(), (44000, 44070, 44140)), 0)

    def test_matches_exhaustive_pairing_on_three_ipes(self):
        domain = [f for f in RITA if f < 41200 or f > 44900]
        for rr in (60, 70, 80):
            gaps = GapParams(rr=rr)
            self.assertEqual(
                disp_sync(_empty_site(rr=rr), domain),
                largest_pairing(tuple(domain), tuple(domain), gaps))

    def test_wide_block_falls_back_to_exhaustive_search(self):
        gaps = GapParams(duplex=50)
        tx = (40000, 40070, 40140)
        rx = (40000, 40070, 40140)
        self.assertEqual(sync_capacity(tx, rx, gaps), 0)
        self.assertEqual(largest_pairing(tx, rx, gaps), 0)

    def test_sync_never_exceeds_async(self):
        rng = new_random_state(5)
        for _ in range(100):
            state, tx_domain, rx_domain = random_site_state(rng)
            tx_count, rx_count = disp_async(state, tx_domain, rx_domain)
            self.assertLessEqual(disp_sync(state, tx_domain, rx_domain),
                                 min(tx_count, rx_count))


class TestSiteReport(SimpleTestCase):

    def test_report_is_coherent(self):
        state = SiteState(site=2, tx=(40000,), rx=(45000,))
        report = site_report(state, RITA)
        self.assertEqual(report.site, 2)
        self.assertEqual((report.tx_count, report.rx_count),
                         disp_async(state, RITA))
        self.assertEqual(report.total, report.tx_count + report.rx_count)
        self.assertEqual(report.sync_count, disp_sync(state, RITA))
        self.assertNotIn(40070, report.tx_available)
        self.assertIn(41000, report.rx_available)

    def test_flags_respect_direction_domains(self):
        report = site_report(_empty_site(), (40000,), (45000,))
        self.assertEqual(report.flags, {40000: (1, 0), 45000: (0, 1)})
