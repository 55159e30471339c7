"""
Closed-form service - analytic information gain, fidelity, probability and efficiency
of a rank-r projective measurement on a completely unknown d-level pure state.

All results are in bits where entropies are involved.
"""
import logging
import math
from typing import List, Tuple

from scipy.special import gammaln

from infofid.models.report import AnalyticReport
from infofid.utils.error_handler import InvalidArgumentError, UndefinedEfficiencyError
from infofid.utils.helpers import validate_dim_rank, validate_kappa_sq

# Create logger
logger = logging.getLogger(__name__)

EULER_GAMMA = 0.57721566490153286061
LN2 = math.log(2.0)

# Direct summation up to here, asymptotic expansion beyond.
HARMONIC_DIRECT_MAX = 10 ** 6
# Rounding can leave I slightly negative near r = d.
NEGATIVE_CLAMP = 1e-12


def harmonic(n: int) -> float:
    """
    Harmonic number eta(n) = sum_{k=1}^{n} 1/k.

    Args:
        n: Positive integer

    Returns:
        eta(n)

    Raises:
        InvalidArgumentError: If n < 1
    """
    if int(n) != n or n < 1:
        raise InvalidArgumentError(f"Harmonic number needs n >= 1, got {n}")
    n = int(n)
    if n <= HARMONIC_DIRECT_MAX:
        # fsum is exactly rounded, so ascending order is kept for clarity only
        return math.fsum(1.0 / k for k in range(1, n + 1))
    return math.log(n) + EULER_GAMMA + 1.0 / (2 * n) - 1.0 / (12 * n * n)


def _harmonic_gap(d: int, r: int) -> float:
    """eta(d) - eta(r) = sum_{k=r+1}^{d} 1/k, without cancellation."""
    if d == r:
        return 0.0
    if d <= HARMONIC_DIRECT_MAX:
        return math.fsum(1.0 / k for k in range(r + 1, d + 1))
    return harmonic(d) - harmonic(r)


def q_bar(d: int, r: int) -> float:
    """Haar average of q: r / d."""
    validate_dim_rank(d, r)
    return r / d


def q2_bar(d: int, r: int) -> float:
    """Haar average of q^2: r (r + 1) / (d (d + 1))."""
    validate_dim_rank(d, r)
    return (r * (r + 1)) / (d * (d + 1))


def q_log_q_bar(d: int, r: int) -> float:
    """Haar average of q log2 q: -(r / (d ln 2)) [eta(d) - eta(r)]."""
    validate_dim_rank(d, r)
    if r == d:
        return 0.0
    return -(r / (d * LN2)) * _harmonic_gap(d, r)


def info_gain(d: int, r: int) -> float:
    """
    Information gain I(m) = log2(d / r) - [eta(d) - eta(r)] / ln 2, in bits.

    Args:
        d: Dimension
        r: Projector rank

    Returns:
        I(m) >= 0, zero exactly when r = d
    """
    validate_dim_rank(d, r)
    if r == d:
        return 0.0
    value = math.log2(d / r) - _harmonic_gap(d, r) / LN2
    if -NEGATIVE_CLAMP < value < 0.0:
        logger.debug(f"Clamping info_gain({d}, {r}) = {value!r} to 0")
        return 0.0
    return value


def info_gain_limit() -> float:
    """Upper bound of I(m) as d grows at r = 1: (1 - gamma) / ln 2."""
    return (1.0 - EULER_GAMMA) / LN2


def mean_fidelity(d: int, r: int) -> float:
    """Posterior-averaged squared fidelity F(m) = (r + 1) / (d + 1)."""
    validate_dim_rank(d, r)
    return (r + 1) / (d + 1)


def mean_fidelity_limit(r: int, eps: float) -> int:
    """
    Smallest d >= r with F(m) = (r + 1) / (d + 1) < eps.

    Args:
        r: Projector rank
        eps: Threshold in (0, 1]

    Returns:
        The dimension d
    """
    if int(r) != r or r < 1:
        raise InvalidArgumentError(f"Rank must be a positive integer, got {r}")
    if not 0.0 < eps <= 1.0:
        raise InvalidArgumentError(f"eps must lie in (0, 1], got {eps}")
    d = max(r, math.floor((r + 1) / eps))
    while (r + 1) / (d + 1) >= eps:
        d += 1
    return d


def total_probability(d: int, r: int, kappa_sq: float) -> float:
    """p(m) = |kappa_m|^2 r / d."""
    validate_dim_rank(d, r)
    validate_kappa_sq(kappa_sq)
    return kappa_sq * r / d


def efficiency(d: int, r: int) -> float:
    """
    Efficiency E_F(m) = I(m) / (1 - F(m)).

    Raises:
        UndefinedEfficiencyError: At r = d, where I(m) = 1 - F(m) = 0
    """
    validate_dim_rank(d, r)
    if r == d:
        raise UndefinedEfficiencyError(
            f"Efficiency is ill-defined at r = d = {d}",
            payload={'dim': d, 'rank': r}
        )
    # 1 - F = (d - r) / (d + 1) exactly
    return info_gain(d, r) * (d + 1) / (d - r)


def max_efficiency() -> float:
    """Global maximum of E_F(m), reached at d = 2, r = 1: 3 [1 - 1 / (2 ln 2)]."""
    return 3.0 * (1.0 - 1.0 / (2.0 * LN2))


def distinguishable_info_gain(d: int, r: int) -> float:
    """Information gain log2(d / r) when the predefined states are an orthonormal basis."""
    validate_dim_rank(d, r)
    return math.log2(d / r)


def indistinguishability_loss(d: int, r: int) -> float:
    """Information lost to non-orthogonal states: [eta(d) - eta(r)] / ln 2."""
    validate_dim_rank(d, r)
    return _harmonic_gap(d, r) / LN2


def tradeoff_curve(d: int) -> List[Tuple[int, float, float]]:
    """
    Single-outcome information-fidelity tradeoff for one dimension.

    Returns:
        (r, I(m), F(m)) for r = 1..d
    """
    validate_dim_rank(d, 1)
    return [(r, info_gain(d, r), mean_fidelity(d, r)) for r in range(1, d + 1)]


def analytic_report(d: int, r: int, kappa_sq: float = 1.0) -> AnalyticReport:
    """
    Bundle I(m), F(m), p(m) and E_F(m) for one configuration.

    Returns:
        AnalyticReport with efficiency None at r = d
    """
    return AnalyticReport(
        dim=d,
        rank=r,
        kappa_sq=kappa_sq,
        info_bits=info_gain(d, r),
        mean_fidelity=mean_fidelity(d, r),
        total_prob=total_probability(d, r, kappa_sq),
        efficiency=None if r == d else efficiency(d, r)
    )


def _validate_power(n: int) -> int:
    if int(n) != n or n < 0:
        raise InvalidArgumentError(f"Power must be a nonnegative integer, got {n}")
    return int(n)


def sin_power_integral(n: int) -> float:
    """
    integral_0^pi sin^n(theta) d(theta) = sqrt(pi) Gamma((n+1)/2) / Gamma((n+2)/2).

    The Gamma ratio goes through log-Gamma so large n does not overflow.
    """
    n = _validate_power(n)
    return math.sqrt(math.pi) * math.exp(gammaln((n + 1) / 2) - gammaln((n + 2) / 2))


def sin_power_log_integral(n: int) -> float:
    """
    integral_0^pi sin^n(theta) log2(sin(theta)) d(theta).

    Equals sin_power_integral(n) times
    (-1)^(n+1) + sum_{k=1}^{n} (-1)^(n+k+1) / (k ln 2).
    """
    n = _validate_power(n)
    sign = -1.0 if n % 2 == 0 else 1.0
    series = math.fsum(
        (1.0 if (n + k + 1) % 2 == 0 else -1.0) / (k * LN2)
        for k in range(1, n + 1)
    )
    return sin_power_integral(n) * (sign + series)
