"""
Command-line application factory.
Builds the argument parser, configures logging and dispatches commands.
"""
import argparse
import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import List, Optional, TextIO

from infofid import __version__
from infofid.config import get_config
from infofid.models.run_config import RunConfig
from infofid.utils.error_handler import handle_cli_error

try:
    from pythonjsonlogger.json import JsonFormatter
except ImportError:  # python-json-logger < 3
    from pythonjsonlogger.jsonlogger import JsonFormatter

# Create logger
logger = logging.getLogger(__name__)

PACKAGE_LOGGER = 'infofid'


def setup_logging(config, level: Optional[str] = None) -> logging.Logger:
    """
    Configure structured logging on stderr, plus an optional rotating file.

    Args:
        config: Configuration class
        level: Level name overriding config.LOG_LEVEL

    Returns:
        The package logger
    """
    level_name = (level or config.LOG_LEVEL).upper()
    log_level = getattr(logging, level_name, logging.INFO)

    if config.LOG_JSON:
        formatter = JsonFormatter(config.LOG_FORMAT)
    else:
        formatter = logging.Formatter(config.LOG_FORMAT)

    package_logger = logging.getLogger(PACKAGE_LOGGER)
    package_logger.setLevel(log_level)
    package_logger.propagate = False
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)

    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setFormatter(formatter)
    package_logger.addHandler(stream_handler)

    # Add file handler for persistent logs
    if config.LOG_DIR:
        try:
            log_dir = Path(config.LOG_DIR)
            log_dir.mkdir(parents=True, exist_ok=True)
            file_handler = RotatingFileHandler(
                log_dir / 'infofid.log',
                maxBytes=10 * 1024 * 1024,  # 10MB
                backupCount=5
            )
            file_handler.setFormatter(formatter)
            package_logger.addHandler(file_handler)
        except OSError as e:
            package_logger.warning(f"Could not create log file: {e}")

    package_logger.debug(f"Logging configured. Level: {level_name}")
    return package_logger


def build_parser() -> argparse.ArgumentParser:
    """
    Create the top-level parser with one subcommand per command module.

    Returns:
        ArgumentParser
    """
    from infofid.commands import figures, limits, report, verify

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=('csv', 'json'), default='csv',
                        help='Output format (default csv)')
    common.add_argument('--out', default=None,
                        help='Output file (directory for figures); default stdout')
    common.add_argument('--log-level', dest='log_level', default=None,
                        help='Logging level (default from LOG_LEVEL)')
    common.add_argument('--workers', type=int, default=None,
                        help='Parallel workers for Monte Carlo chunks')

    parser = argparse.ArgumentParser(
        prog='infofid',
        description='Information gain, fidelity and efficiency of rank-r projective '
                    'measurements on completely unknown pure states.'
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest='command', required=True)

    for module in (report, figures, verify, limits):
        module.register(subparsers, [common])
    return parser


def main(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])
        stdout: Stream for command output (defaults to sys.stdout)

    Returns:
        Process exit status
    """
    stdout = stdout or sys.stdout
    config = get_config()
    parser = build_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    setup_logging(config, args.log_level)

    try:
        run_config = RunConfig.from_args(args, config)
        logger.debug(f"Run configuration: {run_config}")
        return args.handler(run_config, config, stdout)
    except Exception as e:
        return handle_cli_error(e)
