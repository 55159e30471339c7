"""
Quadrature service - numeric integration over the hyperspherical measure.

The ensemble average over pure states becomes
    (d-1)! / (2 pi^d) * integral d(phi) prod_{p=1}^{2d-2} integral d(theta_p) sin^p(theta_p)
with phi in [0, 2 pi) and theta_p in [0, pi].
"""
import logging
import math
from functools import lru_cache
from typing import Callable, Optional, Tuple

from scipy import integrate
from scipy.special import xlogy

from infofid.config import get_config
from infofid.models.state import HypersphericalAngles, PureState
from infofid.services.state_core import angles_to_state
from infofid.utils.error_handler import UnsupportedDimensionError
from infofid.utils.helpers import validate_dim_rank

# Create logger
logger = logging.getLogger(__name__)

# Generic nested integration is only affordable for three angles.
NQUAD_MAX_DIM = 2
EPSREL = 1e-12


def weight_constant(dim: int) -> float:
    """Normalization (d-1)! / (2 pi^d) of the hyperspherical weight."""
    return math.factorial(dim - 1) / (2.0 * math.pi ** dim)


class HypersphericalQuadrature:
    """Adaptive quadrature of state averages against the hyperspherical weight."""

    def __init__(self, epsabs: Optional[float] = None, max_dim: Optional[int] = None):
        """
        Initialize the quadrature.

        Args:
            epsabs: Absolute tolerance passed to each 1-D adaptive rule (default QUADRATURE_EPSABS)
            max_dim: Largest supported dimension d (default QUADRATURE_MAX_DIM)
        """
        config = get_config()
        self.epsabs = config.QUADRATURE_EPSABS if epsabs is None else epsabs
        self.max_dim = config.QUADRATURE_MAX_DIM if max_dim is None else max_dim
        logger.debug(f"Hyperspherical quadrature initialized (epsabs={self.epsabs:g}, max_dim={self.max_dim})")

    def _check_dim(self, dim: int, limit: int) -> None:
        if dim > limit:
            raise UnsupportedDimensionError(
                f"Quadrature supports dimension d <= {limit}, got d = {dim}",
                payload={'dim': dim, 'max_dim': limit}
            )

    def _azimuth_factor(self) -> float:
        value, _ = integrate.quad(lambda phi: 1.0, 0.0, 2.0 * math.pi, epsabs=self.epsabs)
        return value

    def _polar_factor(self, p: int, extra_power: int, with_log: bool) -> float:
        """
        integral_0^pi sin^p(t) * sin^extra(t) [* log2 sin^2(t)] dt.

        Args:
            p: Index of the polar angle (its weight exponent)
            extra_power: Power of sin(t) contributed by the integrand
            with_log: Multiply by log2(sin^2 t)
        """
        return _polar_factor_cached(p, extra_power, with_log, self.epsabs)

    def weight_normalization(self, dim: int) -> float:
        """
        Integral of the bare weight; equals 1 for a correct measure.

        Raises:
            UnsupportedDimensionError: If dim exceeds max_dim
        """
        validate_dim_rank(dim, 1)
        self._check_dim(dim, self.max_dim)
        total = weight_constant(dim) * self._azimuth_factor()
        for p in range(1, 2 * dim - 1):
            total *= self._polar_factor(p, 0, False)
        return total

    def moments(self, dim: int, rank: int) -> Tuple[float, float, float]:
        """
        Averages of q, q^2 and q log2 q.

        q = prod_{p >= 2r-1} sin^2(theta_p) for r < d, so each integrand is a
        sum of products of one-angle factors and the tensor-product integral
        is a sum of products of 1-D adaptive integrals.

        Args:
            dim: Dimension d, 1 <= d <= max_dim
            rank: Projector rank r

        Returns:
            (mean q, mean q^2, mean q log2 q)
        """
        validate_dim_rank(dim, rank)
        self._check_dim(dim, self.max_dim)

        base = weight_constant(dim) * self._azimuth_factor()
        angles = range(1, 2 * dim - 1)
        # theta_p with p >= 2r - 1 carry a sin^2 factor of q
        in_q = {p for p in angles if rank < dim and p >= 2 * rank - 1}

        def product(power: int, log_at: int = 0) -> float:
            total = base
            for p in angles:
                extra = power if p in in_q else 0
                total *= self._polar_factor(p, extra, p == log_at)
            return total

        q1 = product(2)
        q2 = product(4)
        # log2 q = sum over p in in_q of log2 sin^2(theta_p)
        qlq = math.fsum(product(2, log_at=p) for p in sorted(in_q))
        logger.debug(f"Quadrature moments d={dim} r={rank}: {q1!r} {q2!r} {qlq!r}")
        return q1, q2, qlq

    def integrate_over_sphere(self, func: Callable[[PureState], float], dim: int) -> float:
        """
        Average of an arbitrary state function by nested adaptive quadrature.

        Args:
            func: Function of a PureState
            dim: Dimension d <= 2

        Returns:
            The weighted integral
        """
        validate_dim_rank(dim, 1)
        self._check_dim(dim, min(self.max_dim, NQUAD_MAX_DIM))
        n_polar = 2 * dim - 2

        def integrand(*args):
            polar, phi = args[:n_polar], args[n_polar]
            weight = 1.0
            for p, theta in enumerate(polar, start=1):
                weight *= math.sin(theta) ** p
            # azimuth must stay inside [0, 2 pi)
            angles = HypersphericalAngles(dim=dim, polar=polar, azimuth=phi % (2.0 * math.pi))
            return weight * func(angles_to_state(angles))

        ranges = [(0.0, math.pi)] * n_polar + [(0.0, 2.0 * math.pi)]
        value, _ = integrate.nquad(integrand, ranges, opts={'epsabs': self.epsabs, 'epsrel': EPSREL})
        return weight_constant(dim) * value


@lru_cache(maxsize=None)
def _polar_factor_cached(p: int, extra_power: int, with_log: bool, epsabs: float) -> float:
    power = p + extra_power

    if with_log:
        def f(t):
            s = math.sin(t)
            return xlogy(s ** power, s * s) / math.log(2.0)
    else:
        def f(t):
            return math.sin(t) ** power

    value, _ = integrate.quad(f, 0.0, math.pi, epsabs=epsabs, epsrel=EPSREL, limit=200)
    return value


def quadrature_moments(dim: int, rank: int, epsabs: Optional[float] = None) -> Tuple[float, float, float]:
    """Module-level shortcut for HypersphericalQuadrature().moments."""
    return HypersphericalQuadrature(epsabs=epsabs).moments(dim, rank)


def quadrature_integral(integrand: Callable[[float], float], n: int, epsabs: Optional[float] = None) -> float:
    """
    Adaptive integral of integrand(theta) * sin^n(theta) over [0, pi]; the oracle
    for the Gamma-function identities.
    """
    if epsabs is None:
        epsabs = get_config().QUADRATURE_EPSABS
    value, _ = integrate.quad(lambda t: integrand(t) * math.sin(t) ** n, 0.0, math.pi,
                              epsabs=epsabs, epsrel=EPSREL, limit=200)
    return value


def sin_log2(theta: float) -> float:
    """log2(sin(theta)), with 0 at the endpoints where it is multiplied by a vanishing weight."""
    s = math.sin(theta)
    return math.log2(s) if s > 0.0 else 0.0

