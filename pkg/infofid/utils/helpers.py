"""
Helper utilities for argument parsing and validation.
"""
import logging
import re
from typing import Any, List, Optional

# Create logger
logger = logging.getLogger(__name__)

_RANGE_PATTERN = re.compile(r'^\s*(\d+)\s*-\s*(\d+)\s*$')

SEED_MAX = 2 ** 64


def parse_bool(value: Any) -> bool:
    """
    Parse a boolean value from various formats.

    Args:
        value: Value to parse

    Returns:
        Boolean value
    """
    if isinstance(value, bool):
        return value
    if isinstance(value, str):
        return value.lower() in ('true', '1', 'yes', 'on')
    return bool(value)


def parse_int_list(text: str) -> List[int]:
    """
    Parse a list of integers such as "2,4,6" or "2-10" (inclusive ranges).

    Args:
        text: Comma-separated integers and ranges

    Returns:
        List of integers in the given order, duplicates removed

    Raises:
        InvalidArgumentError: If an item is not an integer or range
    """
    from infofid.utils.error_handler import InvalidArgumentError

    values: List[int] = []
    for item in str(text).split(','):
        item = item.strip()
        if not item:
            continue
        match = _RANGE_PATTERN.match(item)
        if match:
            low, high = int(match.group(1)), int(match.group(2))
            if low > high:
                raise InvalidArgumentError(f"Empty range: {item}")
            values.extend(range(low, high + 1))
            continue
        try:
            values.append(int(item))
        except ValueError:
            raise InvalidArgumentError(f"Not an integer: {item!r}")

    if not values:
        raise InvalidArgumentError(f"No integers in {text!r}")

    seen = set()
    unique = [v for v in values if not (v in seen or seen.add(v))]
    return unique


def parse_rank_range(text: Optional[str]) -> Optional[List[int]]:
    """
    Parse a rank selection: "all" (or None) means every rank 1..d.

    Args:
        text: "all" or an integer list

    Returns:
        None for all ranks, else the parsed list
    """
    if text is None or str(text).strip().lower() == 'all':
        return None
    return parse_int_list(text)


def validate_dim_rank(d: int, r: int) -> None:
    """
    Check 1 <= r <= d.

    Raises:
        InvalidArgumentError: On any violation
    """
    from infofid.utils.error_handler import InvalidArgumentError

    if int(d) != d or d < 1:
        raise InvalidArgumentError(f"Dimension must be a positive integer, got {d}")
    if int(r) != r or r < 1 or r > d:
        raise InvalidArgumentError(f"Rank must satisfy 1 <= r <= d, got r={r}, d={d}")


def validate_kappa_sq(kappa_sq: float) -> None:
    """
    Check 0 < kappa_sq <= 1.

    Raises:
        InvalidArgumentError: On any violation
    """
    from infofid.utils.error_handler import InvalidArgumentError

    if not 0.0 < kappa_sq <= 1.0:
        raise InvalidArgumentError(f"kappa_sq must lie in (0, 1], got {kappa_sq}")


def validate_seed(seed: int) -> int:
    """
    Check that a seed is an unsigned 64-bit integer.

    Returns:
        The seed as int
    """
    from infofid.utils.error_handler import InvalidArgumentError

    try:
        seed = int(seed)
    except (TypeError, ValueError):
        raise InvalidArgumentError(f"Seed must be an integer, got {seed!r}")
    if not 0 <= seed < SEED_MAX:
        raise InvalidArgumentError(f"Seed out of range: {seed}")
    return seed


def expand_ranks(d: int, ranks: Optional[List[int]]) -> List[int]:
    """
    Ranks to use for dimension d: all of 1..d, or the requested ones that fit.

    Args:
        d: Dimension
        ranks: Requested ranks or None for all

    Returns:
        Sorted list of ranks within 1..d
    """
    if ranks is None:
        return list(range(1, d + 1))
    selected = sorted(r for r in ranks if 1 <= r <= d)
    skipped = [r for r in ranks if not 1 <= r <= d]
    if skipped:
        logger.debug(f"Skipping ranks {skipped} for d={d}")
    return selected
