"""
Brute-force enumeration of Omega(n, r), the labelled n-cell degree-r networks.

A network in Omega(n, r) is a choice of one composition of r into n
nonnegative parts per row. With the C = binomial(n + r - 1, r) compositions
sorted lexicographically, Omega is indexed by [0, C^n): the base-C digits of
an index, most significant first, pick the rows. Increasing index is then
increasing row-major order, so contiguous index ranges are contiguous
lexicographic chunks that workers can process independently.
"""
import itertools
import math
from functools import lru_cache
from typing import Iterator, Optional, Tuple

import numpy as np

from app.config.settings import Settings
from app.network.network import Matrix, Network
from app.utils.logger import get_logger
from app.utils.validation import Validator, BudgetExceededError

logger = get_logger(__name__)
settings = Settings()

# Upper bound on entries of the (rows, n!, n^2) gather array built per block
GATHER_LIMIT = 1 << 22


def omega_size(n: int, r: int) -> int:
    """|Omega(n, r)| = binomial(n + r - 1, r)^n."""
    Validator.validate_positive_int(n, "n")
    Validator.validate_positive_int(r, "r")
    return math.comb(n + r - 1, r) ** n


def check_budget(n: int, r: int, budget: Optional[int] = None) -> int:
    """
    Refuse enumerations larger than the budget.

    Args:
        n (int): Number of cells
        r (int): Degree
        budget (Optional[int]): Largest allowed |Omega|, defaults to OMEGA_BUDGET

    Returns:
        int: |Omega(n, r)|

    Raises:
        BudgetExceededError: If |Omega(n, r)| exceeds the budget
    """
    budget = settings.OMEGA_BUDGET if budget is None else budget
    Validator.validate_positive_int(budget, "budget")
    size = omega_size(n, r)
    if size > budget:
        raise BudgetExceededError(n, r, size, budget)
    return size


@lru_cache(maxsize=64)
def compositions(n: int, r: int) -> Tuple[Tuple[int, ...], ...]:
    """
    Every way to write r as n ordered nonnegative parts, in lexicographic order.

    Args:
        n (int): Number of parts
        r (int): Total

    Returns:
        Tuple[Tuple[int, ...], ...]: binomial(n + r - 1, r) compositions
    """
    if n == 1:
        return ((r,),)
    return tuple(
        (first,) + rest
        for first in range(r + 1)
        for rest in compositions(n - 1, r - first)
    )


def enumerate_omega(n: int, r: int, budget: Optional[int] = None) -> Iterator[Network]:
    """
    Stream every member of Omega(n, r) once, in lexicographic row-major order.

    Args:
        n (int): Number of cells, n >= 1
        r (int): Degree, r >= 1
        budget (Optional[int]): Largest allowed |Omega|, defaults to OMEGA_BUDGET

    Returns:
        Iterator[Network]: The networks

    Raises:
        BudgetExceededError: Before anything is yielded, if Omega is too large
    """
    size = check_budget(n, r, budget)
    logger.debug(f"Enumerating {size} networks in Omega({n},{r})")
    return (Network(rows) for rows in itertools.product(compositions(n, r), repeat=n))


def decode_chunk(n: int, r: int, start: int, stop: int) -> np.ndarray:
    """
    Materialize Omega indices [start, stop) as an (m, n, n) int64 array.

    Args:
        n (int): Number of cells
        r (int): Degree
        start (int): First index
        stop (int): One past the last index

    Returns:
        np.ndarray: Adjacency matrices in index order
    """
    table = np.array(compositions(n, r), dtype=np.int64)
    base = len(table)
    indices = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((len(indices), n), dtype=np.int64)
    for position in range(n - 1, -1, -1):
        indices, digits[:, position] = np.divmod(indices, base)
    return table[digits]


def keys_fit(n: int, r: int) -> bool:
    """True when every n-cell degree-r matrix has a base-(r+1) key below 2^63."""
    return (r + 1) ** (n * n) < 2 ** 63


@lru_cache(maxsize=16)
def _permutation_gather(n: int) -> np.ndarray:
    """Row i holds, for permutation i, the flat source position of every target entry."""
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    return (perms[:, :, None] * n + perms[:, None, :]).reshape(len(perms), n * n)


def _key_weights(n: int, r: int) -> np.ndarray:
    return (r + 1) ** np.arange(n * n - 1, -1, -1, dtype=np.int64)


def canonical_keys(batch: np.ndarray, n: int, r: int) -> np.ndarray:
    """
    Lexicographic-minimum keys of a batch of matrices.

    Each matrix is read row-major as a base-(r+1) number. Entries never exceed
    r, so comparing keys compares readings, and the smallest key over all
    simultaneous row and column permutations encodes canonical_form.

    Args:
        batch (np.ndarray): (m, n, n) int64 matrices of degree r
        n (int): Number of cells
        r (int): Degree

    Returns:
        np.ndarray: (m,) int64 keys
    """
    if not keys_fit(n, r):
        raise ValueError(f"keys for n={n}, r={r} overflow int64")
    flat = batch.reshape(len(batch), n * n)
    gather = _permutation_gather(n)
    weights = _key_weights(n, r)
    block = max(1, GATHER_LIMIT // (len(gather) * n * n))
    keys = np.empty(len(flat), dtype=np.int64)
    for offset in range(0, len(flat), block):
        part = flat[offset:offset + block]
        keys[offset:offset + block] = (part[:, gather] @ weights).min(axis=1)
    return keys


def decode_key(key: int, n: int, r: int) -> Matrix:
    """Matrix whose row-major base-(r+1) reading is key."""
    entries = []
    for _ in range(n * n):
        key, entry = divmod(int(key), r + 1)
        entries.append(entry)
    entries.reverse()
    return tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n))


def chunk_keys(n: int, r: int, start: int, stop: int, chunk_size: int) -> frozenset:
    """
    Distinct canonical keys of Omega indices [start, stop).

    Args:
        n (int): Number of cells
        r (int): Degree
        start (int): First index
        stop (int): One past the last index
        chunk_size (int): Indices decoded at a time

    Returns:
        frozenset: Canonical keys found in the range
    """
    found = set()
    for lo in range(start, stop, chunk_size):
        hi = min(lo + chunk_size, stop)
        keys = canonical_keys(decode_chunk(n, r, lo, hi), n, r)
        found.update(int(k) for k in np.unique(keys))
        logger.debug(f"Omega({n},{r}) [{lo}, {hi}): {len(found)} classes so far")
    return frozenset(found)
