"""
Tests for the state core service.
"""
import cmath
import math
import unittest

import numpy as np
from scipy import stats

from infofid.models.state import HypersphericalAngles, PureState, SampleStream
from infofid.services.state_core import (
    angles_to_components,
    angles_to_state,
    haar_sample,
    inner_product,
)
from infofid.utils.error_handler import InvalidArgumentError


class TestPureState(unittest.TestCase):
    """Test cases for the PureState model."""

    def test_unnormalized_rejected(self):
        """Test that the unit-norm invariant is enforced."""
        with self.assertRaises(InvalidArgumentError):
            PureState.from_amplitudes([1.0, 1.0])

    def test_length_mismatch_rejected(self):
        """Test that dim and amplitude count must agree."""
        with self.assertRaises(InvalidArgumentError):
            PureState(dim=3, amplitudes=(1.0, 0.0))

    def test_zero_dimension_rejected(self):
        with self.assertRaises(InvalidArgumentError):
            PureState(dim=0, amplitudes=())

    def test_basis(self):
        e2 = PureState.basis(3, 2)
        self.assertEqual(e2.amplitudes, (0j, 1 + 0j, 0j))

    def test_apply_phase_keeps_norm(self):
        state = PureState.from_amplitudes([0.6, 0.8j])
        rotated = state.apply_phase(cmath.exp(0.3j))
        self.assertAlmostEqual(sum(abs(c) ** 2 for c in rotated.amplitudes), 1.0, places=12)

    def test_apply_phase_rejects_non_unit(self):
        with self.assertRaises(InvalidArgumentError):
            PureState.basis(2, 1).apply_phase(2.0)


class TestAnglesToState(unittest.TestCase):
    """Test cases for the hyperspherical map."""

    def test_single_level(self):
        """Test d = 1: only the azimuth remains."""
        state = angles_to_state(HypersphericalAngles(dim=1, polar=(), azimuth=0.0))
        self.assertEqual(state.dim, 1)
        self.assertAlmostEqual(state.amplitudes[0], 1 + 0j, places=15)

    def test_qubit_all_right_angles(self):
        """Test theta_1 = theta_2 = pi/2, phi = 0 gives e_1."""
        angles = HypersphericalAngles(dim=2, polar=(math.pi / 2, math.pi / 2), azimuth=0.0)
        c1, c2 = angles_to_state(angles).amplitudes
        self.assertAlmostEqual(abs(c1 - 1.0), 0.0, places=12)
        self.assertAlmostEqual(abs(c2), 0.0, places=12)

    def test_qubit_hand_evaluated(self):
        """Test theta_1 = pi/3, theta_2 = pi/2, phi = pi/2."""
        angles = HypersphericalAngles(dim=2, polar=(math.pi / 3, math.pi / 2), azimuth=math.pi / 2)
        c1, c2 = angles_to_state(angles).amplitudes
        self.assertAlmostEqual(abs(c1 - 1j * math.sin(math.pi / 3)), 0.0, places=12)
        self.assertAlmostEqual(abs(c2 - 0.5), 0.0, places=12)

    def test_component_order(self):
        """Test the interleaved (alpha_k, beta_k) ordering for d = 3."""
        t = (0.3, 0.7, 1.1, 1.9)
        phi = 2.5
        x = angles_to_components(HypersphericalAngles(dim=3, polar=t, azimuth=phi))
        s = [math.sin(v) for v in t]
        expected = [
            s[3] * s[2] * s[1] * s[0] * math.cos(phi),
            s[3] * s[2] * s[1] * s[0] * math.sin(phi),
            s[3] * s[2] * s[1] * math.cos(t[0]),
            s[3] * s[2] * math.cos(t[1]),
            s[3] * math.cos(t[2]),
            math.cos(t[3]),
        ]
        for got, want in zip(x, expected):
            self.assertAlmostEqual(got, want, places=14)

    def test_unit_norm(self):
        rng = np.random.default_rng(7)
        for dim in (1, 2, 3, 5, 8):
            polar = tuple(rng.uniform(0.0, math.pi, size=2 * dim - 2))
            state = angles_to_state(HypersphericalAngles(dim=dim, polar=polar, azimuth=rng.uniform(0, 2 * math.pi)))
            self.assertAlmostEqual(math.fsum(abs(c) ** 2 for c in state.amplitudes), 1.0, places=12)

    def test_wrong_angle_count(self):
        """Test that the polar count must be 2d - 2."""
        with self.assertRaises(InvalidArgumentError):
            HypersphericalAngles(dim=2, polar=(0.1,), azimuth=0.0)

    def test_angle_out_of_range(self):
        with self.assertRaises(InvalidArgumentError):
            HypersphericalAngles(dim=2, polar=(0.1, 4.0), azimuth=0.0)
        with self.assertRaises(InvalidArgumentError):
            HypersphericalAngles(dim=1, polar=(), azimuth=2 * math.pi)


class TestHaarSample(unittest.TestCase):
    """Test cases for Haar sampling."""

    def test_single_level_is_a_phase(self):
        stream = SampleStream(seed=11)
        for _ in range(5):
            state = haar_sample(1, stream)
            self.assertAlmostEqual(abs(state.amplitudes[0]), 1.0, places=12)
        self.assertEqual(stream.counter, 5)

    def test_zero_dimension(self):
        with self.assertRaises(InvalidArgumentError):
            haar_sample(0, SampleStream(seed=1))

    def test_determinism(self):
        """Test that fresh streams with the same seed repeat the sequence."""
        first = [haar_sample(3, s) for s in [SampleStream(seed=2024)] for _ in range(4)]
        stream = SampleStream(seed=2024)
        second = [haar_sample(3, stream) for _ in range(4)]
        self.assertEqual([s.amplitudes for s in first], [s.amplitudes for s in second])

    def test_spawn_is_pure(self):
        """Test that a child stream depends only on (seed, index)."""
        parent = SampleStream(seed=5)
        parent.draw_batch(2, 10)
        a = parent.spawn(3).draw_batch(2, 4)
        b = SampleStream(seed=5).spawn(3).draw_batch(2, 4)
        np.testing.assert_array_equal(a, b)
        c = SampleStream(seed=5).spawn(4).draw_batch(2, 4)
        self.assertFalse(np.array_equal(a, c))

    def test_seed_range(self):
        with self.assertRaises(InvalidArgumentError):
            SampleStream(seed=-1)
        with self.assertRaises(InvalidArgumentError):
            SampleStream(seed=2 ** 64)
        SampleStream(seed=2 ** 64 - 1)

    def test_batch_rows_unit_norm(self):
        states = SampleStream(seed=3).draw_batch(6, 1000)
        norms = np.sum(np.abs(states) ** 2, axis=1)
        np.testing.assert_allclose(norms, 1.0, atol=1e-12)

    def test_mean_weight_on_first_level(self):
        """Test that the mean of |c_1|^2 is 1/d within 5 standard errors."""
        n = 10 ** 5
        for dim in (2, 3, 7):
            weights = np.abs(SampleStream(seed=100 + dim).draw_batch(dim, n)[:, 0]) ** 2
            stderr = weights.std(ddof=1) / math.sqrt(n)
            self.assertLess(abs(weights.mean() - 1.0 / dim), 5 * stderr)

    def test_haar_invariance(self):
        """Test that |<e_1|U psi>|^2 has the same law as |<e_1|psi>|^2."""
        dim, n = 4, 10 ** 5
        reference = np.abs(SampleStream(seed=1).spawn(0).draw_batch(dim, n)[:, 0]) ** 2
        psi = SampleStream(seed=1).spawn(1).draw_batch(dim, n)

        permutation = np.eye(dim)[[2, 0, 3, 1]]
        phases = np.diag(np.exp(1j * np.array([0.4, 1.3, 2.9, 5.1])))
        for unitary in (permutation, phases, permutation @ phases):
            rotated = np.abs((psi @ unitary.T)[:, 0]) ** 2
            result = stats.ks_2samp(reference, rotated)
            self.assertGreater(result.pvalue, 0.001)


class TestInnerProduct(unittest.TestCase):
    """Test cases for inner_product."""

    def test_self_overlap(self):
        state = haar_sample(5, SampleStream(seed=9))
        self.assertAlmostEqual(abs(inner_product(state, state)), 1.0, places=12)

    def test_orthogonal(self):
        self.assertEqual(inner_product(PureState.basis(2, 1), PureState.basis(2, 2)), 0)

    def test_superposition(self):
        plus = PureState.from_amplitudes([1 / math.sqrt(2), 1 / math.sqrt(2)])
        self.assertAlmostEqual(inner_product(PureState.basis(2, 1), plus), 1 / math.sqrt(2), places=12)

    def test_conjugate_symmetry(self):
        stream = SampleStream(seed=12)
        x, y = haar_sample(3, stream), haar_sample(3, stream)
        self.assertAlmostEqual(inner_product(x, y), inner_product(y, x).conjugate(), places=14)

    def test_dimension_mismatch(self):
        with self.assertRaises(InvalidArgumentError):
            inner_product(PureState.basis(2, 1), PureState.basis(3, 1))


if __name__ == '__main__':
    unittest.main()
