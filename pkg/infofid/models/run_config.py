"""
Run configuration model - validated command-line settings.
"""
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

from infofid.utils.error_handler import InvalidArgumentError
from infofid.utils.helpers import (
    parse_int_list,
    parse_rank_range,
    validate_dim_rank,
    validate_kappa_sq,
    validate_seed,
)

# Create logger
logger = logging.getLogger(__name__)

COMMANDS = ('report', 'figures', 'verify', 'limits')


@dataclass(frozen=True)
class RunConfig:
    """Everything a command needs, checked before any computation starts."""

    command: str
    dims: List[int]
    ranks: Optional[List[int]] = None
    samples: int = 10 ** 6
    seed: int = 0
    kappa_sq: float = 1.0
    out: Optional[Path] = None
    fmt: str = 'csv'
    n_jobs: int = 1
    overrides: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InvalidArgumentError(f"Unknown command: {self.command!r}")
        if not self.dims:
            raise InvalidArgumentError("No dimensions given")
        for d in self.dims:
            validate_dim_rank(d, 1)
        if self.ranks is not None and any(r < 1 for r in self.ranks):
            raise InvalidArgumentError(f"Rank must satisfy 1 <= r <= d, got {self.ranks}")
        validate_kappa_sq(self.kappa_sq)
        validate_seed(self.seed)
        if self.fmt not in ('csv', 'json'):
            raise InvalidArgumentError(f"Unknown format: {self.fmt!r}")
        if self.samples < 2:
            raise InvalidArgumentError(f"samples must be at least 2, got {self.samples}")
        if self.n_jobs == 0:
            raise InvalidArgumentError("workers must be nonzero")

    @classmethod
    def from_args(cls, args, config) -> 'RunConfig':
        """
        Build a RunConfig from parsed arguments and the application config.

        The seed comes from --seed, then the environment variable named by
        config.SEED_ENV_VAR, then config.DEFAULT_SEED.
        """
        seed = getattr(args, 'seed', None)
        if seed is None:
            seed = os.getenv(config.SEED_ENV_VAR) or config.DEFAULT_SEED

        dims_text = getattr(args, 'dims', None)
        if dims_text is None:
            dims = list(config.DEFAULT_FIGURE_DIMS)
        else:
            dims = parse_int_list(dims_text)

        samples = getattr(args, 'samples', None)
        if samples is None:
            samples = config.DEFAULT_SAMPLES
        n_jobs = getattr(args, 'workers', None)
        if n_jobs is None:
            n_jobs = config.N_JOBS

        out = getattr(args, 'out', None)
        return cls(
            command=args.command,
            dims=dims,
            ranks=parse_rank_range(getattr(args, 'rank', None)),
            samples=samples,
            seed=validate_seed(seed),
            kappa_sq=getattr(args, 'kappa_sq', 1.0),
            out=Path(out) if out else None,
            fmt=args.format,
            n_jobs=n_jobs,
            overrides=_parse_overrides(getattr(args, 'tamper', None) or [])
        )


def _parse_overrides(items: List[str]) -> Dict[str, float]:
    overrides = {}
    for item in items:
        name, sep, value = item.partition('=')
        if not sep:
            raise InvalidArgumentError(f"Expected QUANTITY=VALUE, got {item!r}")
        try:
            overrides[name.strip()] = float(value)
        except ValueError:
            raise InvalidArgumentError(f"Not a number: {value!r}")
    return overrides
