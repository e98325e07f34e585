from django.test import SimpleTestCase

from fapk.pkg.availability.site import GapParams
from fapk.pkg.model.domain import inter_planes
from fapk.pkg.preprocess.properties import check_ipe_properties


class TestIpeProperties(SimpleTestCase):

    def test_rita_layout_holds_with_default_gaps(self):
        report = check_ipe_properties()
        self.assertTrue(report.holds)
        self.assertEqual(len(report.ipes), 6)

    def test_small_ipe(self):
        small = check_ipe_properties(inter_planes()[:1], GapParams()).ipes[0]
        self.assertEqual(small.spread, 140)
        self.assertTrue(small.separation_holds)
        self.assertEqual(small.max_tx, 2)
        self.assertEqual(small.max_rx, 3)

    def test_large_ipe_at_rr_70(self):
        large = check_ipe_properties(
            inter_planes()[4:5], GapParams(rr=70)).ipes[0]
        self.assertEqual(large.spread, 210)
        self.assertEqual(large.max_rx, 4)
        self.assertTrue(large.rx_limit_holds)

    def test_rx_limit_fails_above_70(self):
        report = check_ipe_properties(gaps=GapParams(rr=80))
        self.assertFalse(report.rx_limit_holds)
        self.assertTrue(report.separation_holds)
        self.assertTrue(report.tx_limit_holds)
        self.assertFalse(report.holds)

    def test_separation_fails_for_a_short_tx_rx_gap(self):
        report = check_ipe_properties(gaps=GapParams(tr=100))
        self.assertFalse(report.separation_holds)
