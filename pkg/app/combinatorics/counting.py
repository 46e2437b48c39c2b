"""
Closed-form network counts.

H(n, r): n-cell degree-r networks up to isomorphism (Burnside over cycle types).
K(n, r): the connected ones, by removing disjoint unions of smaller connected networks.
M(n, r): the minimal connected ones, by removing the floor(r/s) expansions of
         every minimal network of lower degree s.
"""
import math
import threading
from typing import Dict, Optional, Tuple

from sympy import totient

from app.combinatorics.partitions import partitions, class_size
from app.combinatorics.powerseries import phi_coeff
from app.utils.logger import get_logger
from app.utils.validation import Validator, InternalConsistencyError

logger = get_logger(__name__)

FAMILIES = ('H', 'K', 'M')


def multiset_coefficient(K: int, a: int) -> int:
    """
    Number of size-a multisets drawn from K items, binomial(K + a - 1, a).

    Args:
        K (int): Number of distinct items
        a (int): Multiset size

    Returns:
        int: 1 when a == 0, 0 when K == 0 < a
    """
    Validator.validate_nonnegative_int(K, "K")
    Validator.validate_nonnegative_int(a, "a")
    if a == 0:
        return 1
    if K == 0:
        return 0
    return math.comb(K + a - 1, a)


def euler_totient(r: int) -> int:
    """Count of 1 <= k <= r with gcd(k, r) == 1."""
    Validator.validate_positive_int(r, "r")
    return int(totient(r))


class NetworkCounter:
    """
    Evaluator for the H, K and M families with a shared memo.

    The memo is keyed on (family, n, r) and guarded by a lock, so one counter
    may serve several worker threads. With use_memo=False every value is
    recomputed from the recursions.
    """

    def __init__(self, use_memo: bool = True):
        """
        Initialize a counter.

        Args:
            use_memo (bool, optional): Cache intermediate values
        """
        self.use_memo = use_memo
        self._memo: Dict[Tuple[str, int, int], int] = {}
        self._lock = threading.Lock()

    def _lookup(self, family: str, n: int, r: int) -> Optional[int]:
        if not self.use_memo:
            return None
        with self._lock:
            return self._memo.get((family, n, r))

    def _store(self, family: str, n: int, r: int, value: int) -> int:
        if self.use_memo:
            with self._lock:
                self._memo[(family, n, r)] = value
        return value

    def clear(self) -> None:
        """Drop every memoized value."""
        with self._lock:
            self._memo.clear()

    def count(self, family: str, n: int, r: int) -> int:
        """
        Dispatch to the family's counting function.

        Args:
            family (str): One of 'H', 'K', 'M'
            n (int): Number of cells
            r (int): Degree

        Returns:
            int: The count
        """
        Validator.validate_choice(family, FAMILIES, "family")
        if family == 'H':
            return self.count_all(n, r)
        if family == 'K':
            return self.count_connected(n, r)
        return self.count_minimal(n, r)

    def count_all(self, n: int, r: int) -> int:
        """
        H(n, r), networks counted up to isomorphism.

        (1/n!) * sum over cycle types rho of |class(rho)| * prod_k phi_r(k, rho)^alpha_k

        Args:
            n (int): Number of cells, n >= 1
            r (int): Degree, r >= 1

        Returns:
            int: H(n, r)
        """
        Validator.validate_positive_int(n, "n")
        Validator.validate_positive_int(r, "r")

        cached = self._lookup('H', n, r)
        if cached is not None:
            return cached

        total = 0
        for rho in partitions(n):
            fixed = 1
            for k, alpha_k in enumerate(rho.alpha, start=1):
                if alpha_k:
                    fixed *= phi_coeff(r, k, rho) ** alpha_k
            total += class_size(rho) * fixed

        value, remainder = divmod(total, math.factorial(n))
        if remainder:
            raise InternalConsistencyError(
                f"Burnside sum {total} for H({n},{r}) is not divisible by {n}!"
            )
        logger.debug(f"H({n},{r}) = {value}")
        return self._store('H', n, r, value)

    def count_disconnected(self, n: int, r: int) -> int:
        """
        Disconnected n-cell degree-r networks up to isomorphism.

        Every cycle type without an n-part is a multiset of connected components:
        alpha_m components drawn with replacement from the K(m, r) connected m-cell networks.

        Args:
            n (int): Number of cells
            r (int): Degree

        Returns:
            int: H(n, r) - K(n, r); zero for n = 1
        """
        Validator.validate_positive_int(n, "n")
        Validator.validate_positive_int(r, "r")

        total = 0
        for rho in partitions(n):
            if rho.multiplicity(n):
                continue
            ways = 1
            for m in range(1, n):
                alpha_m = rho.multiplicity(m)
                if alpha_m:
                    ways *= multiset_coefficient(self.count_connected(m, r), alpha_m)
            total += ways
        return total

    def count_connected(self, n: int, r: int) -> int:
        """
        K(n, r), connected networks counted up to isomorphism.

        Args:
            n (int): Number of cells, n >= 1
            r (int): Degree, r >= 1

        Returns:
            int: K(n, r)
        """
        Validator.validate_positive_int(n, "n")
        Validator.validate_positive_int(r, "r")

        cached = self._lookup('K', n, r)
        if cached is not None:
            return cached

        if n == 1:
            return self._store('K', n, r, 1)

        value = self.count_all(n, r) - self.count_disconnected(n, r)
        if value < 0:
            raise InternalConsistencyError(f"K({n},{r}) evaluated to {value}")
        logger.debug(f"K({n},{r}) = {value}")
        return self._store('K', n, r, value)

    def count_minimal(self, n: int, r: int) -> int:
        """
        M(n, r), minimal connected networks counted up to isomorphism.

        Args:
            n (int): Number of cells, n >= 1
            r (int): Degree, r >= 1

        Returns:
            int: M(n, r)

        Raises:
            InternalConsistencyError: If the recursion goes negative
        """
        Validator.validate_positive_int(n, "n")
        Validator.validate_positive_int(r, "r")

        cached = self._lookup('M', n, r)
        if cached is not None:
            return cached

        if n == 1:
            return self._store('M', n, r, 0)
        if r == 1:
            return self._store('M', n, r, self.count_connected(n, 1))

        value = self.count_connected(n, r) - sum(
            (r // s) * self.count_minimal(n, s) for s in range(1, r)
        )
        if value < 0:
            raise InternalConsistencyError(f"M({n},{r}) evaluated to {value}")
        logger.debug(f"M({n},{r}) = {value}")
        return self._store('M', n, r, value)


# Shared counter behind the module-level functions
default_counter = NetworkCounter()


def count_all(n: int, r: int) -> int:
    """H(n, r) from the shared counter."""
    return default_counter.count_all(n, r)


def count_disconnected(n: int, r: int) -> int:
    """H(n, r) - K(n, r) from the shared counter."""
    return default_counter.count_disconnected(n, r)


def count_connected(n: int, r: int) -> int:
    """K(n, r) from the shared counter."""
    return default_counter.count_connected(n, r)


def count_minimal(n: int, r: int) -> int:
    """M(n, r) from the shared counter."""
    return default_counter.count_minimal(n, r)


def count(family: str, n: int, r: int) -> int:
    """Family dispatch on the shared counter."""
    return default_counter.count(family, n, r)
