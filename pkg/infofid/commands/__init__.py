"""
Command handlers for the infofid command line.

Each module exposes `register(subparsers, parents)` and a `run(run_config, app_config, stdout)`
handler returning the process exit status.
"""
from typing import Optional, TextIO

from infofid.models.run_config import RunConfig
from infofid.services.table_writer import TableWriter


def emit(text: str, run_config: RunConfig, stdout: TextIO, writer: Optional[TableWriter] = None) -> None:
    """Write rendered output to --out when given, otherwise to stdout."""
    if run_config.out is not None:
        (writer or TableWriter()).save(text, run_config.out)
    else:
        stdout.write(text)
