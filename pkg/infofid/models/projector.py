"""
Projector models - the rank-r measurement operator and single-outcome records.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict

from infofid.models.state import PureState
from infofid.utils.helpers import validate_dim_rank, validate_kappa_sq

# Create logger
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RankProjector:
    """
    Measurement operator kappa_m P^(r) on C^d.

    P^(r) projects onto the first r basis vectors; only |kappa_m|^2 is stored.
    """

    dim: int
    rank: int
    kappa_sq: float = 1.0

    def __post_init__(self):
        validate_dim_rank(self.dim, self.rank)
        validate_kappa_sq(self.kappa_sq)

    @property
    def is_identity(self) -> bool:
        """True when r = d, the uninformative measurement."""
        return self.rank == self.dim

    def with_kappa_sq(self, kappa_sq: float) -> 'RankProjector':
        """Same projector with another |kappa_m|^2."""
        return RankProjector(dim=self.dim, rank=self.rank, kappa_sq=kappa_sq)

    def to_dict(self) -> Dict[str, Any]:
        return {'dim': self.dim, 'rank': self.rank, 'kappa_sq': self.kappa_sq}


@dataclass(frozen=True)
class OutcomeRecord:
    """Result of obtaining outcome m on a known input state."""

    q: float
    prob: float
    post_state: PureState
    fidelity_single: float

    def to_dict(self) -> Dict[str, Any]:
        """Convert record to dictionary."""
        return {
            'q': self.q,
            'prob': self.prob,
            'post_state': self.post_state.to_dict(),
            'fidelity_single': self.fidelity_single
        }
