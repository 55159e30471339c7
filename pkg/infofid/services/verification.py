"""
Verification service - compares closed forms against Monte Carlo estimates.
"""
import logging
from typing import Callable, Dict, Iterable, List, Optional

from infofid.models.report import VerificationRow
from infofid.services import closed_form
from infofid.services.estimator import MonteCarloEstimator
from infofid.utils.error_handler import InvalidArgumentError
from infofid.utils.helpers import expand_ranks

# Create logger
logger = logging.getLogger(__name__)

QUANTITIES: Dict[str, Callable[[int, int], float]] = {
    'q_bar': closed_form.q_bar,
    'q2_bar': closed_form.q2_bar,
    'q_log_q_bar': closed_form.q_log_q_bar,
    'I': closed_form.info_gain,
    'F': closed_form.mean_fidelity,
}


def run_verification(dims: Iterable[int], ranks: Optional[List[int]], n: int, seed: int,
                     estimator: MonteCarloEstimator,
                     overrides: Optional[Dict[str, float]] = None) -> List[VerificationRow]:
    """
    One row per (d, r, quantity), all quantities of a (d, r) sharing one sample set.

    Args:
        dims: Dimensions to verify
        ranks: Ranks to verify (None for all 1..d)
        n: Samples per (d, r)
        seed: Master seed, reused for every (d, r)
        estimator: Configured Monte Carlo estimator
        overrides: Replacement analytic values by quantity name (test hook)

    Returns:
        List of VerificationRow
    """
    overrides = dict(overrides or {})
    unknown = set(overrides) - set(QUANTITIES)
    if unknown:
        raise InvalidArgumentError(f"Unknown quantities in override: {sorted(unknown)}")

    rows: List[VerificationRow] = []
    for d in dims:
        for r in expand_ranks(d, ranks):
            estimates = estimator.estimate_all(d, r, n, seed)
            for name, formula in QUANTITIES.items():
                analytic = overrides.get(name, formula(d, r))
                rows.append(VerificationRow.build(d, r, name, analytic, estimates[name]))
    if not rows:
        raise InvalidArgumentError(f"No rank in {ranks} fits any dimension in {list(dims)}")
    logger.info(f"Verified {len(rows)} rows")
    return rows
