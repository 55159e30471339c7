"""
Measurement service - outcome probability, state reduction and single-outcome fidelity
for the rank-r projective measurement.
"""
import logging
import math

import numpy as np

from infofid.models.projector import OutcomeRecord, RankProjector
from infofid.models.state import HypersphericalAngles, PureState
from infofid.utils.error_handler import InvalidArgumentError, OutcomeImpossibleError
from infofid.utils.helpers import validate_dim_rank

# Create logger
logger = logging.getLogger(__name__)

# Below this q the reduction 1/sqrt(q) is treated as impossible.
Q_IMPOSSIBLE = 1e-15


def _check_dims(proj: RankProjector, state: PureState) -> None:
    if proj.dim != state.dim:
        raise InvalidArgumentError(
            f"Dimension mismatch: projector on C^{proj.dim}, state in C^{state.dim}"
        )


def q_value(proj: RankProjector, state: PureState) -> float:
    """
    Weight of the state on the projector support, sum_{k<=r} |c_k|^2.

    Independent of kappa_sq. Exactly 1 for the full-rank projector.

    Args:
        proj: Rank-r projector
        state: Pre-measurement state

    Returns:
        q in [0, 1]
    """
    _check_dims(proj, state)
    if proj.is_identity:
        return 1.0
    q = math.fsum(abs(c) ** 2 for c in state.amplitudes[:proj.rank])
    return min(q, 1.0)


def q_values_batch(rank: int, amplitudes: np.ndarray) -> np.ndarray:
    """
    Vectorized q for an (n, d) array of state rows.

    Args:
        rank: Projector rank r, 1 <= r <= d
        amplitudes: complex array of shape (n, d)

    Returns:
        float array of shape (n,)
    """
    n, dim = amplitudes.shape
    validate_dim_rank(dim, rank)
    if rank == dim:
        return np.ones(n)
    head = amplitudes[:, :rank]
    q = np.einsum('ij,ij->i', head.real, head.real) + np.einsum('ij,ij->i', head.imag, head.imag)
    return np.minimum(q, 1.0)


def q_from_angles(angles: HypersphericalAngles, rank: int) -> float:
    """
    q in hyperspherical coordinates: prod_{p=2r-1}^{2d-2} sin^2(theta_p), or 1 when r = d.

    Args:
        angles: Hyperspherical angles of the state
        rank: Projector rank

    Returns:
        q in [0, 1]
    """
    validate_dim_rank(angles.dim, rank)
    if rank == angles.dim:
        return 1.0
    return math.prod(math.sin(theta) ** 2 for theta in angles.polar[2 * rank - 2:])


def outcome_probability(proj: RankProjector, state: PureState) -> float:
    """p(m|a) = |kappa_m|^2 q_m(a)."""
    return proj.kappa_sq * q_value(proj, state)


def posterior_weight(proj: RankProjector, state: PureState) -> float:
    """
    Posterior density p(a|m) relative to the uniform prior, q_m(a) / mean(q) = q d / r.

    Averages to 1 over the Haar ensemble.
    """
    return q_value(proj, state) * proj.dim / proj.rank


def collapse(proj: RankProjector, state: PureState) -> OutcomeRecord:
    """
    Reduce the state on outcome m.

    Args:
        proj: Rank-r projector
        state: Pre-measurement state

    Returns:
        OutcomeRecord with the post-measurement state and F(m, a) = sqrt(q)

    Raises:
        OutcomeImpossibleError: If q < 1e-15
    """
    q = q_value(proj, state)
    if q < Q_IMPOSSIBLE:
        raise OutcomeImpossibleError(
            f"Outcome cannot occur: state has weight q = {q:.3g} on the rank-{proj.rank} support",
            payload={'q': q, 'dim': proj.dim, 'rank': proj.rank}
        )

    if proj.is_identity:
        post = state
    else:
        scale = 1.0 / math.sqrt(q)
        amplitudes = tuple(
            c * scale if k < proj.rank else 0j
            for k, c in enumerate(state.amplitudes)
        )
        post = PureState(dim=state.dim, amplitudes=amplitudes)

    # |<psi|psi_m>| = sum_{k<=r} |c_k|^2 / sqrt(q) = sqrt(q)
    fidelity = math.sqrt(q)
    return OutcomeRecord(
        q=q,
        prob=proj.kappa_sq * q,
        post_state=post,
        fidelity_single=fidelity
    )
