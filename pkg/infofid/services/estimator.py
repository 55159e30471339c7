"""
Monte Carlo estimator service - Haar-ensemble averages of q, q^2 and q log2 q,
and the ratio estimators for I(m) and F(m) with delta-method standard errors.

Samples are split into fixed-size chunks; chunk i draws from a stream seeded by
(seed, i) only and the per-chunk sums are reduced in chunk order, so results do
not depend on the worker count.
"""
import logging
import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed
from scipy.special import xlogy

from infofid.models.report import MomentEstimate
from infofid.models.state import SampleStream
from infofid.services.measurement import q_values_batch
from infofid.utils.error_handler import InvalidArgumentError
from infofid.utils.helpers import validate_dim_rank, validate_kappa_sq, validate_seed

# Create logger
logger = logging.getLogger(__name__)

LN2 = math.log(2.0)

# Moment vector components
Q, Q2, QLQ = 0, 1, 2


def _chunk_sums(dim: int, rank: int, seed: int, index: int, size: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Sums of the moment vector x = (q, q^2, q log2 q) and of x x^T over one chunk.

    Args:
        dim: Dimension d
        rank: Projector rank r
        seed: Master seed
        index: Chunk index
        size: Samples in this chunk

    Returns:
        (sum of x with shape (3,), sum of outer products with shape (3, 3))
    """
    stream = SampleStream(seed=seed).spawn(index)
    states = stream.draw_batch(dim, size)
    q = q_values_batch(rank, states)
    # x log x -> 0 at x = 0
    x = np.column_stack((q, q * q, xlogy(q, q) / LN2))
    return x.sum(axis=0), x.T @ x


@dataclass(frozen=True)
class MomentAccumulator:
    """Sample mean and covariance of the moment vector."""

    n: int
    mean: np.ndarray
    cov: np.ndarray

    def estimate(self, component: int) -> MomentEstimate:
        """Sample mean of one component with its standard error."""
        var = max(float(self.cov[component, component]), 0.0)
        return MomentEstimate(
            value=float(self.mean[component]),
            stderr=math.sqrt(var / self.n),
            n_samples=self.n
        )

    def delta(self, value: float, gradient: np.ndarray) -> MomentEstimate:
        """
        Estimate of a smooth function of the means, first-order error propagation.

        Args:
            value: The function evaluated at the sample means
            gradient: Its gradient with respect to the mean vector
        """
        var = max(float(gradient @ self.cov @ gradient), 0.0)
        return MomentEstimate(value=float(value), stderr=math.sqrt(var / self.n), n_samples=self.n)


class MonteCarloEstimator:
    """Seeded, chunked Monte Carlo over Haar-random states."""

    def __init__(self, chunk_size: int = 2 ** 16, n_jobs: int = 1, prefer: Optional[str] = None):
        """
        Initialize the estimator.

        Args:
            chunk_size: Samples per chunk; fixes the seed layout
            n_jobs: joblib worker count
            prefer: joblib backend preference ("processes" or "threads")
        """
        if chunk_size < 1:
            raise InvalidArgumentError(f"chunk_size must be positive, got {chunk_size}")
        self.chunk_size = int(chunk_size)
        self.n_jobs = n_jobs
        self.prefer = prefer
        logger.debug(f"Monte Carlo estimator initialized (chunk_size={chunk_size}, n_jobs={n_jobs})")

    def accumulate(self, dim: int, rank: int, n: int, seed: int) -> MomentAccumulator:
        """
        Draw n Haar states and reduce the moment vector.

        Args:
            dim: Dimension d
            rank: Projector rank r
            n: Sample count, at least 2
            seed: Unsigned 64-bit master seed

        Returns:
            MomentAccumulator
        """
        validate_dim_rank(dim, rank)
        seed = validate_seed(seed)
        if int(n) != n or n < 2:
            raise InvalidArgumentError(f"Need at least 2 samples, got {n}")
        n = int(n)

        sizes = [self.chunk_size] * (n // self.chunk_size)
        if n % self.chunk_size:
            sizes.append(n % self.chunk_size)
        logger.info(f"Estimating d={dim} r={rank} with n={n} samples in {len(sizes)} chunks (n_jobs={self.n_jobs})")

        results = Parallel(n_jobs=self.n_jobs, prefer=self.prefer)(
            delayed(_chunk_sums)(dim, rank, seed, i, size) for i, size in enumerate(sizes)
        )

        s1 = np.zeros(3)
        s2 = np.zeros((3, 3))
        for chunk_s1, chunk_s2 in results:
            s1 += chunk_s1
            s2 += chunk_s2

        mean = s1 / n
        cov = (s2 - n * np.outer(mean, mean)) / (n - 1)
        return MomentAccumulator(n=n, mean=mean, cov=cov)

    def estimate_moments(self, dim: int, rank: int, n: int,
                         seed: int) -> Tuple[MomentEstimate, MomentEstimate, MomentEstimate]:
        """
        Estimates of mean q, mean q^2 and mean q log2 q.

        Returns:
            Three MomentEstimates in that order
        """
        acc = self.accumulate(dim, rank, n, seed)
        return acc.estimate(Q), acc.estimate(Q2), acc.estimate(QLQ)

    @staticmethod
    def _info_from(acc: MomentAccumulator) -> MomentEstimate:
        # I = (m3 - m1 log2 m1) / m1 = m3 / m1 - log2 m1
        m1, m3 = acc.mean[Q], acc.mean[QLQ]
        value = m3 / m1 - math.log2(m1)
        gradient = np.array([-m3 / (m1 * m1) - 1.0 / (m1 * LN2), 0.0, 1.0 / m1])
        return acc.delta(value, gradient)

    @staticmethod
    def _fidelity_from(acc: MomentAccumulator) -> MomentEstimate:
        # F = m2 / m1
        m1, m2 = acc.mean[Q], acc.mean[Q2]
        gradient = np.array([-m2 / (m1 * m1), 1.0 / m1, 0.0])
        return acc.delta(m2 / m1, gradient)

    def estimate_info_gain(self, dim: int, rank: int, n: int, seed: int) -> MomentEstimate:
        """Plug-in ratio estimate of I(m) in bits."""
        return self._info_from(self.accumulate(dim, rank, n, seed))

    def estimate_mean_fidelity(self, dim: int, rank: int, n: int, seed: int) -> MomentEstimate:
        """
        Plug-in ratio estimate of F(m) = mean(q^2) / mean(q).

        Weighting each sample's squared fidelity q by q itself realizes the
        posterior p(a|m), which is proportional to q.
        """
        return self._fidelity_from(self.accumulate(dim, rank, n, seed))

    def estimate_total_probability(self, dim: int, rank: int, kappa_sq: float, n: int,
                                   seed: int) -> MomentEstimate:
        """Estimate of p(m) = |kappa_m|^2 mean(q)."""
        validate_kappa_sq(kappa_sq)
        q = self.accumulate(dim, rank, n, seed).estimate(Q)
        return MomentEstimate(value=kappa_sq * q.value, stderr=kappa_sq * q.stderr, n_samples=q.n_samples)

    def estimate_all(self, dim: int, rank: int, n: int, seed: int) -> Dict[str, MomentEstimate]:
        """
        Every verified quantity from a single sample set.

        Returns:
            Mapping with keys q_bar, q2_bar, q_log_q_bar, I, F
        """
        acc = self.accumulate(dim, rank, n, seed)
        return {
            'q_bar': acc.estimate(Q),
            'q2_bar': acc.estimate(Q2),
            'q_log_q_bar': acc.estimate(QLQ),
            'I': self._info_from(acc),
            'F': self._fidelity_from(acc)
        }


def estimate_moments(dim: int, rank: int, n: int, seed: int, n_jobs: int = 1):
    """Module-level shortcut for MonteCarloEstimator.estimate_moments."""
    return MonteCarloEstimator(n_jobs=n_jobs).estimate_moments(dim, rank, n, seed)


def estimate_info_gain(dim: int, rank: int, n: int, seed: int, n_jobs: int = 1) -> MomentEstimate:
    """Module-level shortcut for MonteCarloEstimator.estimate_info_gain."""
    return MonteCarloEstimator(n_jobs=n_jobs).estimate_info_gain(dim, rank, n, seed)


def estimate_mean_fidelity(dim: int, rank: int, n: int, seed: int, n_jobs: int = 1) -> MomentEstimate:
    """Module-level shortcut for MonteCarloEstimator.estimate_mean_fidelity."""
    return MonteCarloEstimator(n_jobs=n_jobs).estimate_mean_fidelity(dim, rank, n, seed)
