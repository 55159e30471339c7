"""
Limits command - approach of I(m) at r = 1 to its large-d bound.
"""
import logging
from typing import TextIO

from infofid.commands import emit
from infofid.models.run_config import RunConfig
from infofid.services.closed_form import info_gain, info_gain_limit
from infofid.services.table_writer import TableWriter
from infofid.utils.error_handler import InvalidArgumentError

# Create logger
logger = logging.getLogger(__name__)

COLUMNS = ('d', 'I', 'limit', 'gap')
DEFAULT_DIMS = '2,4,6,8,10,100,1000,10000'


def register(subparsers, parents):
    parser = subparsers.add_parser('limits', parents=parents,
                                   help='Compare I(m) at r = 1 with the large-d bound')
    parser.add_argument('--dims', '--dim', dest='dims', default=DEFAULT_DIMS,
                        help=f'Ascending dimensions (default {DEFAULT_DIMS})')
    parser.set_defaults(handler=run)


def run(run_config: RunConfig, app_config, stdout: TextIO) -> int:
    """
    One row per d with I(d, 1), the bound and their gap.

    Returns:
        Exit status 0
    """
    dims = run_config.dims
    if any(b <= a for a, b in zip(dims, dims[1:])):
        raise InvalidArgumentError(f"limits needs strictly ascending dimensions, got {dims}")

    limit = info_gain_limit()
    rows = []
    for d in dims:
        info = info_gain(d, 1)
        rows.append({'d': d, 'I': info, 'limit': limit, 'gap': limit - info})

    writer = TableWriter(app_config.CSV_SIGNIFICANT_DIGITS)
    emit(writer.render(rows, COLUMNS, run_config.fmt), run_config, stdout, writer)
    return 0
