"""
State core service - hyperspherical parametrization, Haar sampling and overlaps.
"""
import logging
import math
from typing import List

import numpy as np

from infofid.models.state import HypersphericalAngles, PureState, SampleStream
from infofid.utils.error_handler import InvalidArgumentError

# Create logger
logger = logging.getLogger(__name__)


def angles_to_components(angles: HypersphericalAngles) -> List[float]:
    """
    Real components (alpha_1, beta_1, alpha_2, beta_2, ..., alpha_d, beta_d).

    With x_j the j-th component and n = 2d - 2 polar angles:
        x_1 = sin(theta_n) ... sin(theta_1) cos(phi)
        x_2 = sin(theta_n) ... sin(theta_1) sin(phi)
        x_j = sin(theta_n) ... sin(theta_{j-1}) cos(theta_{j-2})   for j >= 3

    Args:
        angles: Hyperspherical angles of a d-level state

    Returns:
        List of 2d floats
    """
    polar = angles.polar
    n = len(polar)

    # tail[k] = prod_{p=k+1..n} sin(theta_p), so tail[n] = 1
    tail = [1.0] * (n + 1)
    for k in range(n - 1, -1, -1):
        tail[k] = tail[k + 1] * math.sin(polar[k])

    components = [tail[0] * math.cos(angles.azimuth), tail[0] * math.sin(angles.azimuth)]
    for j in range(3, 2 * angles.dim + 1):
        components.append(tail[j - 2] * math.cos(polar[j - 3]))
    return components


def angles_to_state(angles: HypersphericalAngles) -> PureState:
    """
    Map hyperspherical angles to the state with c_k = alpha_k + i beta_k.

    Args:
        angles: Valid hyperspherical angles

    Returns:
        PureState of dimension angles.dim
    """
    x = angles_to_components(angles)
    amplitudes = tuple(complex(x[2 * k], x[2 * k + 1]) for k in range(angles.dim))
    return PureState(dim=angles.dim, amplitudes=amplitudes)


def haar_sample(dim: int, stream: SampleStream) -> PureState:
    """
    Draw one state from the unitarily invariant measure.

    Args:
        dim: Dimension d >= 1
        stream: Sample stream to advance

    Returns:
        A Haar-random PureState

    Raises:
        InvalidArgumentError: If dim < 1
    """
    if int(dim) != dim or dim < 1:
        raise InvalidArgumentError(f"Dimension must be a positive integer, got {dim}")
    row = stream.draw_batch(dim, 1)[0]
    return PureState(dim=dim, amplitudes=tuple(complex(c) for c in row))


def inner_product(x: PureState, y: PureState) -> complex:
    """
    <x|y> = sum_k conj(x_k) y_k.

    Raises:
        InvalidArgumentError: On dimension mismatch
    """
    if x.dim != y.dim:
        raise InvalidArgumentError(f"Dimension mismatch: {x.dim} vs {y.dim}")
    return complex(np.vdot(x.as_array(), y.as_array()))
