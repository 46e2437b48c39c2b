"""
Integer partitions in multiplicity notation.

A partition of n is stored as its multiplicity vector: alpha[k] counts the
parts equal to k. Partitions of n index the conjugacy classes (cycle types)
of the symmetric group S_n, which is how the Burnside counts consume them.
"""
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from sympy.utilities.iterables import partitions as sympy_partitions

from app.config.settings import Settings
from app.utils.logger import get_logger
from app.utils.validation import (
    Validator, ValidationError, UnsupportedSizeError, InternalConsistencyError,
)

logger = get_logger(__name__)
settings = Settings()


@dataclass(frozen=True)
class Partition:
    """
    Partition of n in multiplicity form.

    Attributes:
        n (int): The integer being partitioned
        alpha (Tuple[int, ...]): Dense vector of length n, alpha[k - 1] is the
            number of parts equal to k
    """
    n: int
    alpha: Tuple[int, ...]

    def __post_init__(self):
        Validator.validate_positive_int(self.n, "n")
        if len(self.alpha) != self.n:
            raise ValidationError(
                f"alpha must have length {self.n}, got {len(self.alpha)}"
            )
        if any(not isinstance(a, int) or a < 0 for a in self.alpha):
            raise ValidationError(f"alpha entries must be nonnegative integers: {self.alpha}")
        total = sum(k * a for k, a in enumerate(self.alpha, start=1))
        if total != self.n:
            raise ValidationError(f"alpha {self.alpha} sums to {total}, not {self.n}")

    @classmethod
    def from_parts(cls, parts: List[int]) -> 'Partition':
        """
        Build a partition from a list of part sizes.

        Args:
            parts (List[int]): Positive part sizes in any order

        Returns:
            Partition: The partition of sum(parts)
        """
        n = sum(parts)
        Validator.validate_positive_int(n, "n")
        alpha = [0] * n
        for part in parts:
            Validator.validate_int_range(part, 1, n, "part")
            alpha[part - 1] += 1
        return cls(n, tuple(alpha))

    def multiplicity(self, k: int) -> int:
        """Number of parts equal to k (1-indexed); zero outside 1..n."""
        if 1 <= k <= self.n:
            return self.alpha[k - 1]
        return 0

    @property
    def parts(self) -> List[int]:
        """Part sizes in nonincreasing order."""
        result = []
        for k in range(self.n, 0, -1):
            result.extend([k] * self.alpha[k - 1])
        return result

    def __str__(self) -> str:
        terms = [f"{k}^{a}" for k, a in enumerate(self.alpha, start=1) if a]
        return "[" + " ".join(terms) + "]"


def partitions(n: int) -> List[Partition]:
    """
    Generate every partition of n exactly once.

    Order is reverse-lexicographic on nonincreasing part lists, so for n = 5:
    [5^1], [1^1 4^1], [2^1 3^1], [1^2 3^1], [1^1 2^2], [1^3 2^1], [1^5].

    Args:
        n (int): Positive integer, at most MAX_PARTITION_N

    Returns:
        List[Partition]: The partitions of n; the length is p(n)

    Raises:
        ValidationError: If n < 1
        UnsupportedSizeError: If n exceeds the configured cap
    """
    Validator.validate_int_range(
        n, 1, settings.MAX_PARTITION_N, "n", error_class=UnsupportedSizeError
    )
    return list(_partitions(n))


@lru_cache(maxsize=None)
def _partitions(n: int) -> Tuple[Partition, ...]:
    result = []
    for multiplicities in sympy_partitions(n):
        alpha = [0] * n
        for part, count in multiplicities.items():
            alpha[part - 1] = count
        result.append(Partition(n, tuple(alpha)))
    logger.debug(f"Generated {len(result)} partitions of {n}")
    return tuple(result)


def class_size(rho: Partition) -> int:
    """
    Size of the conjugacy class of S_n with cycle type rho.

    n! / (1^a1 2^a2 ... n^an * a1! a2! ... an!)

    Args:
        rho (Partition): Cycle type

    Returns:
        int: Number of permutations with that cycle type
    """
    denominator = 1
    for k, a in enumerate(rho.alpha, start=1):
        if a:
            denominator *= k ** a * math.factorial(a)
    size, remainder = divmod(math.factorial(rho.n), denominator)
    if remainder:
        raise InternalConsistencyError(f"class size of {rho} is not an integer")
    return size
