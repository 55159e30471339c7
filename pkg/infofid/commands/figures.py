"""
Figures command - plot-ready data for the information, fidelity, tradeoff and
efficiency curves.
"""
import logging
from pathlib import Path
from typing import Any, Dict, List, TextIO, Tuple

from infofid.models.run_config import RunConfig
from infofid.services import closed_form
from infofid.services.table_writer import TableWriter
from infofid.utils.error_handler import InvalidArgumentError

# Create logger
logger = logging.getLogger(__name__)

FIGURE_COLUMNS = {
    'fig1': ('d', 'r', 'I'),
    'fig2': ('d', 'r', 'F'),
    'fig3': ('d', 'I', 'F'),
    'fig4': ('d', 'r', 'E_F'),
}


def register(subparsers, parents):
    parser = subparsers.add_parser('figures', parents=parents,
                                   help='Write fig1..fig4 data files into the --out directory')
    parser.add_argument('--dims', '--dim', dest='dims', default=None,
                        help='Dimensions (default 2,4,6,8,10)')
    parser.set_defaults(handler=run)


def figure_rows(dims: List[int]) -> Dict[str, List[Dict[str, Any]]]:
    """
    Rows of every figure, ordered by d then r.

    Args:
        dims: Dimensions to tabulate

    Returns:
        Mapping of figure name to rows
    """
    figures = {name: [] for name in FIGURE_COLUMNS}
    for d in dims:
        for r, info, fidelity in closed_form.tradeoff_curve(d):
            figures['fig1'].append({'d': d, 'r': r, 'I': info})
            figures['fig2'].append({'d': d, 'r': r, 'F': fidelity})
            figures['fig3'].append({'d': d, 'I': info, 'F': fidelity})
            if r < d:
                figures['fig4'].append({'d': d, 'r': r, 'E_F': closed_form.efficiency(d, r)})
    return figures


def run(run_config: RunConfig, app_config, stdout: TextIO) -> int:
    """
    Write fig1..fig4 as <out>/figN.csv (or .json).

    Returns:
        Exit status 0
    """
    if run_config.out is None:
        raise InvalidArgumentError("figures needs --out <directory>")

    writer = TableWriter(app_config.CSV_SIGNIFICANT_DIGITS)
    written: List[Tuple[str, Path]] = []
    for name, rows in figure_rows(run_config.dims).items():
        path = Path(run_config.out) / f"{name}.{run_config.fmt}"
        writer.save(writer.render(rows, FIGURE_COLUMNS[name], run_config.fmt), path)
        written.append((name, path))

    for name, path in written:
        stdout.write(f"{name}: {path}\n")
    return 0
