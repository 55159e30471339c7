"""
State models - pure states, hyperspherical angles and seeded sample streams.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Sequence, Tuple

import numpy as np

from infofid.utils.error_handler import InvalidArgumentError
from infofid.utils.helpers import validate_seed

# Create logger
logger = logging.getLogger(__name__)

NORM_TOLERANCE = 1e-12
# Squared norms below this are redrawn when sampling.
DEGENERATE_NORM_SQ = 1e-300


@dataclass(frozen=True)
class PureState:
    """A unit vector of d complex amplitudes."""

    dim: int
    amplitudes: Tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, 'amplitudes', tuple(complex(c) for c in self.amplitudes))
        if int(self.dim) != self.dim or self.dim < 1:
            raise InvalidArgumentError(f"Dimension must be a positive integer, got {self.dim}")
        if len(self.amplitudes) != self.dim:
            raise InvalidArgumentError(
                f"Expected {self.dim} amplitudes, got {len(self.amplitudes)}"
            )
        norm_sq = math.fsum(abs(c) ** 2 for c in self.amplitudes)
        if abs(norm_sq - 1.0) > NORM_TOLERANCE:
            raise InvalidArgumentError(f"State is not normalized: sum |c_k|^2 = {norm_sq!r}")

    @classmethod
    def from_amplitudes(cls, amplitudes: Sequence[complex]) -> 'PureState':
        """
        Build a state from a sequence of amplitudes.

        Args:
            amplitudes: d complex numbers with unit total weight

        Returns:
            PureState
        """
        values = tuple(complex(c) for c in amplitudes)
        return cls(dim=len(values), amplitudes=values)

    @classmethod
    def basis(cls, dim: int, k: int) -> 'PureState':
        """Orthonormal basis vector e_k (1-based k)."""
        if not 1 <= k <= dim:
            raise InvalidArgumentError(f"Basis index {k} outside 1..{dim}")
        return cls(dim=dim, amplitudes=tuple(1.0 + 0j if i == k - 1 else 0j for i in range(dim)))

    def as_array(self) -> np.ndarray:
        """Amplitudes as a complex128 array."""
        return np.asarray(self.amplitudes, dtype=np.complex128)

    def apply_phase(self, phase: complex) -> 'PureState':
        """Multiply every amplitude by a unit-modulus number."""
        if abs(abs(phase) - 1.0) > NORM_TOLERANCE:
            raise InvalidArgumentError(f"Phase must have unit modulus, got |phase| = {abs(phase)}")
        return PureState(dim=self.dim, amplitudes=tuple(phase * c for c in self.amplitudes))

    def to_dict(self) -> Dict[str, Any]:
        """Convert state to a JSON-friendly dictionary."""
        return {
            'dim': self.dim,
            'real': [c.real for c in self.amplitudes],
            'imag': [c.imag for c in self.amplitudes]
        }


@dataclass(frozen=True)
class HypersphericalAngles:
    """
    Angles (theta_1, ..., theta_{2d-2}, phi) on the unit sphere in 2d real dimensions.

    polar[p - 1] holds theta_p.
    """

    dim: int
    polar: Tuple[float, ...]
    azimuth: float

    def __post_init__(self):
        object.__setattr__(self, 'polar', tuple(float(t) for t in self.polar))
        if int(self.dim) != self.dim or self.dim < 1:
            raise InvalidArgumentError(f"Dimension must be a positive integer, got {self.dim}")
        if len(self.polar) != 2 * self.dim - 2:
            raise InvalidArgumentError(
                f"Dimension {self.dim} needs {2 * self.dim - 2} polar angles, got {len(self.polar)}"
            )
        for p, theta in enumerate(self.polar, start=1):
            if not 0.0 <= theta <= math.pi:
                raise InvalidArgumentError(f"theta_{p} = {theta} outside [0, pi]")
        if not 0.0 <= self.azimuth < 2.0 * math.pi:
            raise InvalidArgumentError(f"Azimuth {self.azimuth} outside [0, 2pi)")


@dataclass
class SampleStream:
    """
    Seeded source of Haar-random states.

    Single owner only; concurrent work takes disjoint streams from spawn().
    """

    seed: int
    counter: int = 0
    _spawn_key: Tuple[int, ...] = field(default=(), repr=False)
    _rng: np.random.Generator = field(init=False, repr=False)

    def __post_init__(self):
        self.seed = validate_seed(self.seed)
        sequence = np.random.SeedSequence(entropy=self.seed, spawn_key=self._spawn_key)
        self._rng = np.random.Generator(np.random.PCG64(sequence))

    def spawn(self, index: int) -> 'SampleStream':
        """
        Child stream derived from (seed, index) alone.

        Args:
            index: Nonnegative child index

        Returns:
            A fresh, independent SampleStream
        """
        if index < 0:
            raise InvalidArgumentError(f"Spawn index must be nonnegative, got {index}")
        return SampleStream(seed=self.seed, _spawn_key=self._spawn_key + (int(index),))

    def draw_batch(self, dim: int, n: int) -> np.ndarray:
        """
        Draw n Haar-random states as rows of an (n, dim) complex array.

        Args:
            dim: Dimension d >= 1
            n: Number of states

        Returns:
            complex128 array of unit rows
        """
        if int(dim) != dim or dim < 1:
            raise InvalidArgumentError(f"Dimension must be a positive integer, got {dim}")
        if n < 0:
            raise InvalidArgumentError(f"Sample count must be nonnegative, got {n}")

        gauss = self._rng.standard_normal((n, 2 * dim))
        norm_sq = np.einsum('ij,ij->i', gauss, gauss)
        degenerate = np.flatnonzero(norm_sq < DEGENERATE_NORM_SQ)
        for i in degenerate:
            logger.debug(f"Redrawing degenerate normal vector at row {i}")
            while norm_sq[i] < DEGENERATE_NORM_SQ:
                gauss[i] = self._rng.standard_normal(2 * dim)
                norm_sq[i] = gauss[i] @ gauss[i]

        states = (gauss[:, 0::2] + 1j * gauss[:, 1::2]) / np.sqrt(norm_sq)[:, None]
        self.counter += n
        return states
