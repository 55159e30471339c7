"""
Report models - analytic reports, Monte Carlo estimates and verification rows.
"""
import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, Optional

from infofid.utils.error_handler import InvalidArgumentError

# Create logger
logger = logging.getLogger(__name__)

UNDEFINED = 'undefined'


@dataclass(frozen=True)
class AnalyticReport:
    """Closed-form I(m), F(m), p(m) and E_F(m) for one (d, r, |kappa_m|^2)."""

    dim: int
    rank: int
    kappa_sq: float
    info_bits: float
    mean_fidelity: float
    total_prob: float
    efficiency: Optional[float]

    def to_dict(self) -> Dict[str, Any]:
        """Row with the report column names; efficiency is "undefined" at r = d."""
        return {
            'd': self.dim,
            'r': self.rank,
            'kappa_sq': self.kappa_sq,
            'I': self.info_bits,
            'F': self.mean_fidelity,
            'p': self.total_prob,
            'E_F': UNDEFINED if self.efficiency is None else self.efficiency
        }


@dataclass(frozen=True)
class MomentEstimate:
    """Monte Carlo estimate of an average over the Haar ensemble."""

    value: float
    stderr: float
    n_samples: int

    def __post_init__(self):
        if self.n_samples < 1:
            raise InvalidArgumentError(f"n_samples must be positive, got {self.n_samples}")
        if self.stderr < 0 or math.isnan(self.stderr):
            raise InvalidArgumentError(f"stderr must be nonnegative, got {self.stderr}")
        if self.stderr > 0 and self.n_samples < 2:
            raise InvalidArgumentError(f"A single sample has no spread, got stderr={self.stderr}")

    def z_score(self, reference: float) -> float:
        """
        |value - reference| in units of stderr.

        A zero stderr gives 0 on an exact match and infinity otherwise.
        """
        diff = abs(self.value - reference)
        if self.stderr == 0.0:
            return 0.0 if diff == 0.0 else math.inf
        return diff / self.stderr

    def to_dict(self) -> Dict[str, Any]:
        return {'value': self.value, 'stderr': self.stderr, 'n_samples': self.n_samples}


@dataclass(frozen=True)
class VerificationRow:
    """One closed form compared against its Monte Carlo estimate."""

    dim: int
    rank: int
    quantity: str
    analytic: float
    estimate: MomentEstimate
    z_score: float

    @classmethod
    def build(cls, dim: int, rank: int, quantity: str, analytic: float,
              estimate: MomentEstimate) -> 'VerificationRow':
        """Create a row, computing the z-score from the other fields."""
        return cls(
            dim=dim,
            rank=rank,
            quantity=quantity,
            analytic=analytic,
            estimate=estimate,
            z_score=estimate.z_score(analytic)
        )

    def flagged(self, threshold: float) -> bool:
        return self.z_score > threshold

    def to_dict(self, threshold: float) -> Dict[str, Any]:
        """Row with the verify column names."""
        return {
            'd': self.dim,
            'r': self.rank,
            'quantity': self.quantity,
            'analytic': self.analytic,
            'estimate': self.estimate.value,
            'stderr': self.estimate.stderr,
            'n_samples': self.estimate.n_samples,
            'z': self.z_score,
            'flagged': int(self.flagged(threshold))
        }
