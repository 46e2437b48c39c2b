"""
Exact truncated power series.

Only what the fixed-point counts need: expansion of (1 - z^m)^(-e), the
truncated Cauchy product, and the product Phi_{s,rho}(z) over the cycle type
rho whose coefficients phi_r(s, rho) feed the Burnside sum. Coefficients are
Python ints throughout.
"""
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from app.combinatorics.partitions import Partition
from app.utils.logger import get_logger
from app.utils.validation import Validator, ValidationError

logger = get_logger(__name__)


@dataclass(frozen=True)
class TruncatedSeries:
    """
    Power series kept up to and including z^order.

    Attributes:
        order (int): Truncation order R
        coeffs (Tuple[int, ...]): Coefficients of z^0 .. z^R
    """
    order: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        Validator.validate_nonnegative_int(self.order, "order")
        if len(self.coeffs) != self.order + 1:
            raise ValidationError(
                f"series of order {self.order} needs {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def one(cls, order: int) -> 'TruncatedSeries':
        """The constant series 1."""
        return cls(order, (1,) + (0,) * order)

    def coefficient(self, r: int) -> int:
        """Coefficient of z^r; r must not exceed the order."""
        Validator.validate_int_range(r, 0, self.order, "r")
        return self.coeffs[r]

    def __mul__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        return multiply(self, other)


def geometric_power_factor(m: int, e: int, R: int) -> TruncatedSeries:
    """
    Expand (1 - z^m)^(-e) up to z^R.

    The coefficient of z^(m*t) is binomial(e + t - 1, t); all others vanish.

    Args:
        m (int): Power of z in the factor, m >= 1
        e (int): Exponent, e >= 1
        R (int): Truncation order

    Returns:
        TruncatedSeries: The truncated expansion
    """
    Validator.validate_positive_int(m, "m")
    Validator.validate_positive_int(e, "e")
    Validator.validate_nonnegative_int(R, "R")

    coeffs = [0] * (R + 1)
    for t in range(R // m + 1):
        coeffs[m * t] = math.comb(e + t - 1, t)
    return TruncatedSeries(R, tuple(coeffs))


def multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """
    Cauchy product truncated at the common order.

    Args:
        a (TruncatedSeries): Left factor
        b (TruncatedSeries): Right factor of the same order

    Returns:
        TruncatedSeries: a * b mod z^(order + 1)

    Raises:
        ValidationError: If the orders differ
    """
    if a.order != b.order:
        raise ValidationError(f"order mismatch: {a.order} vs {b.order}")

    order = a.order
    coeffs = [0] * (order + 1)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(order - i + 1):
            y = b.coeffs[j]
            if y:
                coeffs[i + j] += x * y
    return TruncatedSeries(order, tuple(coeffs))


def phi_series(s: int, rho: Partition, R: int) -> TruncatedSeries:
    """
    Phi_{s,rho}(z) = prod_k (1 - z^(k/h))^(-alpha_k * h), h = gcd(s, k), up to z^R.

    Args:
        s (int): Cycle length of the permutation position, 1 <= s <= rho.n
        rho (Partition): Cycle type
        R (int): Truncation order

    Returns:
        TruncatedSeries: The truncated product
    """
    Validator.validate_int_range(s, 1, rho.n, "s")
    Validator.validate_nonnegative_int(R, "R")
    return _phi_series(s, rho, R)


@lru_cache(maxsize=4096)
def _phi_series(s: int, rho: Partition, R: int) -> TruncatedSeries:
    result = TruncatedSeries.one(R)
    for k, alpha_k in enumerate(rho.alpha, start=1):
        if not alpha_k:
            continue
        h = math.gcd(s, k)
        result = multiply(result, geometric_power_factor(k // h, alpha_k * h, R))
    return result


def phi_coeff(r: int, s: int, rho: Partition) -> int:
    """
    phi_r(s, rho), the coefficient of z^r in Phi_{s,rho}(z).

    phi_0 is the constant term 1.

    Args:
        r (int): Degree, r >= 0
        s (int): Cycle length, 1 <= s <= rho.n
        rho (Partition): Cycle type

    Returns:
        int: The coefficient
    """
    Validator.validate_nonnegative_int(r, "r")
    return phi_series(s, rho, r).coeffs[r]
