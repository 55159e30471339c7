"""
Tests for the Monte Carlo estimator and the verification service.
"""
import math
import unittest

import pytest

from infofid.models.report import MomentEstimate
from infofid.services import closed_form as cf
from infofid.services.estimator import MonteCarloEstimator, estimate_info_gain
from infofid.services.verification import QUANTITIES, run_verification
from infofid.utils.error_handler import InvalidArgumentError

Z_THRESHOLD = 5.0
SEED = 20110518


class TestMonteCarloEstimator(unittest.TestCase):
    """Test cases for MonteCarloEstimator."""

    def setUp(self):
        self.estimator = MonteCarloEstimator(chunk_size=2 ** 12, n_jobs=1)

    def test_full_rank_is_exact(self):
        """Test that r = d gives exact values with zero standard error."""
        for d in (1, 2, 5):
            estimates = self.estimator.estimate_all(d, d, 10 ** 4, SEED)
            self.assertEqual(estimates['q_bar'].value, 1.0)
            self.assertEqual(estimates['q_log_q_bar'].value, 0.0)
            self.assertEqual(estimates['I'].value, 0.0)
            self.assertEqual(estimates['I'].stderr, 0.0)
            self.assertEqual(estimates['F'].value, 1.0)
            self.assertEqual(estimates['F'].stderr, 0.0)

    def test_moments_within_tolerance(self):
        for d, r in ((2, 1), (3, 1), (4, 2), (5, 3)):
            q1, q2, qlq = self.estimator.estimate_moments(d, r, 2 * 10 ** 5, SEED)
            self.assertLess(q1.z_score(cf.q_bar(d, r)), Z_THRESHOLD)
            self.assertLess(q2.z_score(cf.q2_bar(d, r)), Z_THRESHOLD)
            self.assertLess(qlq.z_score(cf.q_log_q_bar(d, r)), Z_THRESHOLD)

    def test_info_and_fidelity_within_tolerance(self):
        for d, r in ((2, 1), (4, 2), (6, 1)):
            info = self.estimator.estimate_info_gain(d, r, 2 * 10 ** 5, SEED)
            fid = self.estimator.estimate_mean_fidelity(d, r, 2 * 10 ** 5, SEED)
            self.assertGreater(info.stderr, 0.0)
            self.assertLess(info.z_score(cf.info_gain(d, r)), Z_THRESHOLD)
            self.assertLess(fid.z_score(cf.mean_fidelity(d, r)), Z_THRESHOLD)

    def test_total_probability(self):
        est = self.estimator.estimate_total_probability(4, 1, 0.5, 10 ** 5, SEED)
        self.assertLess(est.z_score(cf.total_probability(4, 1, 0.5)), Z_THRESHOLD)

    def test_deterministic_given_seed(self):
        a = self.estimator.estimate_all(3, 1, 10 ** 4 + 17, 99)
        b = self.estimator.estimate_all(3, 1, 10 ** 4 + 17, 99)
        self.assertEqual(a, b)

    def test_independent_of_worker_count(self):
        """Test that results are identical for any number of workers."""
        serial = self.estimator.estimate_all(4, 2, 5 * 10 ** 4, 7)
        threaded = MonteCarloEstimator(chunk_size=2 ** 12, n_jobs=3, prefer='threads').estimate_all(4, 2, 5 * 10 ** 4, 7)
        self.assertEqual(serial, threaded)

    def test_seed_changes_result(self):
        a = self.estimator.estimate_info_gain(3, 1, 10 ** 4, 1)
        b = self.estimator.estimate_info_gain(3, 1, 10 ** 4, 2)
        self.assertNotEqual(a.value, b.value)

    def test_stderr_scaling(self):
        """Test that four times the samples roughly halves the standard error."""
        small = self.estimator.estimate_info_gain(3, 1, 2 * 10 ** 4, SEED)
        large = self.estimator.estimate_info_gain(3, 1, 8 * 10 ** 4, SEED)
        self.assertTrue(0.4 < large.stderr / small.stderr < 0.6)

    def test_invalid_arguments(self):
        with self.assertRaises(InvalidArgumentError):
            self.estimator.estimate_moments(3, 4, 100, SEED)
        with self.assertRaises(InvalidArgumentError):
            self.estimator.estimate_moments(3, 1, 1, SEED)
        with self.assertRaises(InvalidArgumentError):
            self.estimator.estimate_moments(3, 1, 100, -5)
        with self.assertRaises(InvalidArgumentError):
            MonteCarloEstimator(chunk_size=0)

    def test_module_shortcut(self):
        est = estimate_info_gain(2, 1, 10 ** 4, SEED)
        self.assertIsInstance(est, MomentEstimate)
        self.assertEqual(est.n_samples, 10 ** 4)


class TestMomentEstimate(unittest.TestCase):
    """Test cases for the MomentEstimate model."""

    def test_z_score(self):
        est = MomentEstimate(value=1.0, stderr=0.1, n_samples=100)
        self.assertAlmostEqual(est.z_score(1.25), 2.5, places=12)

    def test_zero_stderr(self):
        est = MomentEstimate(value=1.0, stderr=0.0, n_samples=100)
        self.assertEqual(est.z_score(1.0), 0.0)
        self.assertEqual(est.z_score(0.9), math.inf)

    def test_validation(self):
        with self.assertRaises(InvalidArgumentError):
            MomentEstimate(value=1.0, stderr=-1.0, n_samples=10)
        with self.assertRaises(InvalidArgumentError):
            MomentEstimate(value=1.0, stderr=0.1, n_samples=0)

    def test_single_sample_has_no_stderr(self):
        with self.assertRaises(InvalidArgumentError):
            MomentEstimate(value=1.0, stderr=0.1, n_samples=1)
        est = MomentEstimate(value=1.0, stderr=0.0, n_samples=1)
        self.assertEqual(est.z_score(1.0), 0.0)


class TestRunVerification(unittest.TestCase):
    """Test cases for run_verification."""

    def setUp(self):
        self.estimator = MonteCarloEstimator(chunk_size=2 ** 12, n_jobs=1)

    def test_rows(self):
        rows = run_verification([2, 3], [1], 10 ** 4, SEED, self.estimator)
        self.assertEqual(len(rows), 2 * len(QUANTITIES))
        self.assertEqual([row.quantity for row in rows[:5]], list(QUANTITIES))
        for row in rows:
            self.assertFalse(row.flagged(Z_THRESHOLD))

    def test_all_ranks(self):
        rows = run_verification([3], None, 10 ** 4, SEED, self.estimator)
        self.assertEqual(sorted({row.rank for row in rows}), [1, 2, 3])

    def test_override_is_flagged(self):
        rows = run_verification([2], [1], 10 ** 4, SEED, self.estimator, overrides={'I': 0.5})
        flagged = [row.quantity for row in rows if row.flagged(Z_THRESHOLD)]
        self.assertEqual(flagged, ['I'])

    def test_override_unknown_quantity(self):
        with self.assertRaises(InvalidArgumentError):
            run_verification([2], [1], 10 ** 4, SEED, self.estimator, overrides={'X': 1.0})

    def test_log_messages(self):
        with self.assertLogs('infofid', level='INFO') as captured:
            run_verification([2], [1], 10 ** 4, SEED, self.estimator)
        messages = [record.getMessage() for record in captured.records]
        self.assertIn('Estimating d=2 r=1 with n=10000 samples in 3 chunks (n_jobs=1)', messages)
        self.assertIn('Verified 5 rows', messages)

    def test_row_dict(self):
        row = run_verification([2], [2], 10 ** 4, SEED, self.estimator)[0]
        data = row.to_dict(Z_THRESHOLD)
        self.assertEqual(list(data), ['d', 'r', 'quantity', 'analytic', 'estimate',
                                      'stderr', 'n_samples', 'z', 'flagged'])
        self.assertEqual(data['flagged'], 0)

    @pytest.mark.slow
    def test_full_grid(self):
        """Every (d, r) with d <= 10 at 10^6 samples stays within the threshold."""
        rows = run_verification(range(1, 11), None, 10 ** 6, SEED,
                                MonteCarloEstimator(chunk_size=2 ** 16, n_jobs=-1))
        flagged = [(row.dim, row.rank, row.quantity) for row in rows if row.flagged(Z_THRESHOLD)]
        self.assertEqual(flagged, [])


if __name__ == '__main__':
    unittest.main()
