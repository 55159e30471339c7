"""
Report command - closed-form I(m), F(m), p(m) and E_F(m) per (d, r).
"""
import logging
from typing import TextIO

from infofid.commands import emit
from infofid.models.run_config import RunConfig
from infofid.services.closed_form import analytic_report
from infofid.services.table_writer import TableWriter
from infofid.utils.error_handler import InvalidArgumentError
from infofid.utils.helpers import expand_ranks

# Create logger
logger = logging.getLogger(__name__)

COLUMNS = ('d', 'r', 'kappa_sq', 'I', 'F', 'p', 'E_F')


def register(subparsers, parents):
    parser = subparsers.add_parser('report', parents=parents,
                                   help='Print the analytic report for each (d, r)')
    parser.add_argument('--dim', '--dims', dest='dims', default=None,
                        help='Dimensions, e.g. "2,4" or "2-10" (default 2,4,6,8,10)')
    parser.add_argument('--rank', default='all', help='Ranks or "all" (default all)')
    parser.add_argument('--kappa-sq', dest='kappa_sq', type=float, default=1.0,
                        help='|kappa_m|^2 in (0, 1] (default 1)')
    parser.set_defaults(handler=run)


def run(run_config: RunConfig, app_config, stdout: TextIO) -> int:
    """
    Emit one analytic report row per requested (d, r).

    Returns:
        Exit status 0
    """
    rows = []
    for d in run_config.dims:
        for r in expand_ranks(d, run_config.ranks):
            rows.append(analytic_report(d, r, run_config.kappa_sq).to_dict())
    if not rows:
        raise InvalidArgumentError(f"No rank in {run_config.ranks} fits any dimension in {run_config.dims}")
    logger.info(f"Report with {len(rows)} rows")

    writer = TableWriter(app_config.CSV_SIGNIFICANT_DIGITS)
    emit(writer.render(rows, COLUMNS, run_config.fmt), run_config, stdout, writer)
    return 0
