"""
Verify command - Monte Carlo check of every closed form.
"""
import argparse
import logging
from typing import TextIO

from infofid.commands import emit
from infofid.models.run_config import RunConfig
from infofid.services.estimator import MonteCarloEstimator
from infofid.services.table_writer import TableWriter
from infofid.services.verification import run_verification
from infofid.utils.error_handler import InvalidArgumentError, VerificationFailedError

# Create logger
logger = logging.getLogger(__name__)

COLUMNS = ('d', 'r', 'quantity', 'analytic', 'estimate', 'stderr', 'n_samples', 'z', 'flagged')


def register(subparsers, parents):
    parser = subparsers.add_parser('verify', parents=parents,
                                   help='Check the closed forms against Monte Carlo estimates')
    parser.add_argument('--dims', '--dim', dest='dims', default=None,
                        help='Dimensions (default 2,4,6,8,10)')
    parser.add_argument('--rank', default='all', help='Ranks or "all" (default all)')
    parser.add_argument('--samples', type=int, default=None,
                        help='Samples per (d, r) (default 1000000)')
    parser.add_argument('--seed', type=int, default=None,
                        help='Unsigned 64-bit seed (default: $INFOFID_SEED, then a fixed seed)')
    parser.add_argument('--tamper', action='append', default=None, help=argparse.SUPPRESS)
    parser.set_defaults(handler=run)


def run(run_config: RunConfig, app_config, stdout: TextIO) -> int:
    """
    Emit the verification table; fail when any |z| exceeds the threshold.

    Returns:
        Exit status 0

    Raises:
        VerificationFailedError: If a row is flagged (exit status 1)
    """
    if run_config.samples < app_config.MIN_VERIFY_SAMPLES:
        raise InvalidArgumentError(
            f"verify needs at least {app_config.MIN_VERIFY_SAMPLES} samples, got {run_config.samples}"
        )

    estimator = MonteCarloEstimator(chunk_size=app_config.CHUNK_SIZE, n_jobs=run_config.n_jobs)
    rows = run_verification(run_config.dims, run_config.ranks, run_config.samples,
                            run_config.seed, estimator, overrides=run_config.overrides)

    threshold = app_config.Z_THRESHOLD
    writer = TableWriter(app_config.CSV_SIGNIFICANT_DIGITS)
    emit(writer.render([row.to_dict(threshold) for row in rows], COLUMNS, run_config.fmt),
         run_config, stdout, writer)

    flagged = [row for row in rows if row.flagged(threshold)]
    if flagged:
        raise VerificationFailedError(
            f"{len(flagged)} of {len(rows)} rows exceed |z| > {threshold:g}",
            payload={'flagged': [f"d={row.dim} r={row.rank} {row.quantity}" for row in flagged]}
        )
    logger.info(f"All {len(rows)} rows within |z| <= {threshold:g}")
    return 0
