"""
Orbit census of Omega(n, r).

Deduplicates Omega(n, r) to isomorphism classes and classifies each class
as connected and/or reduced, recording which minimal network every
connected class reduces to. This is the independent check on the H, K and
M counts.
"""
import concurrent.futures
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Set, Tuple

from app.config.settings import Settings
from app.network.canonical import canonical_form
from app.network.network import Matrix, Network, is_connected, is_reduced, reduce
from app.oracle.enumeration import (
    check_budget, chunk_keys, decode_key, enumerate_omega, keys_fit,
)
from app.utils.logger import get_logger
from app.utils.validation import Validator, UnsupportedSizeError

logger = get_logger(__name__)
settings = Settings()


@dataclass(frozen=True)
class OrbitCensus:
    """
    Isomorphism classes of Omega(n, r).

    Attributes:
        n (int): Number of cells
        r (int): Degree
        total_orbits (int): All classes
        connected_orbits (int): Weakly connected classes
        minimal_connected_orbits (int): Connected and reduced classes
        class_breakdown (Dict[Matrix, int]): Canonical reduced form -> number of
            connected classes reducing to it
        representatives (Tuple[Matrix, ...]): Sorted canonical form of every class
    """
    n: int
    r: int
    total_orbits: int
    connected_orbits: int
    minimal_connected_orbits: int
    class_breakdown: Dict[Matrix, int] = field(default_factory=dict)
    representatives: Tuple[Matrix, ...] = ()

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'r': self.r,
            'total_orbits': self.total_orbits,
            'connected_orbits': self.connected_orbits,
            'minimal_connected_orbits': self.minimal_connected_orbits,
        }


def _spans(size: int, parts: int) -> List[Tuple[int, int]]:
    step = -(-size // parts)
    return [(lo, min(lo + step, size)) for lo in range(0, size, step)]


def canonical_classes(
    n: int,
    r: int,
    workers: Optional[int] = None,
    budget: Optional[int] = None
) -> List[Matrix]:
    """
    Sorted canonical forms of every isomorphism class in Omega(n, r).

    Uses the vectorised key search when the keys fit in int64 and the
    per-network canonical_form search otherwise. With several workers the
    index space is split into contiguous spans, one per process, and the
    partial key sets are merged by union; the result does not depend on the
    worker count.

    Args:
        n (int): Number of cells
        r (int): Degree
        workers (Optional[int]): Worker processes, defaults to ORACLE_WORKERS
        budget (Optional[int]): Largest allowed |Omega|, defaults to OMEGA_BUDGET

    Returns:
        List[Matrix]: Canonical forms in increasing lexicographic order
    """
    Validator.validate_int_range(
        n, 1, settings.CANONICAL_FORM_CAP, "number of cells", error_class=UnsupportedSizeError
    )
    size = check_budget(n, r, budget)
    workers = workers or settings.ORACLE_WORKERS
    Validator.validate_positive_int(workers, "workers")

    if not keys_fit(n, r):
        logger.info(f"Keys for Omega({n},{r}) overflow int64, using per-network search")
        return sorted({canonical_form(G) for G in enumerate_omega(n, r, budget)})

    chunk_size = settings.CENSUS_CHUNK_SIZE
    keys: Set[int] = set()
    if workers == 1 or size <= chunk_size:
        keys = set(chunk_keys(n, r, 0, size, chunk_size))
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(chunk_keys, n, r, lo, hi, chunk_size)
                for lo, hi in _spans(size, workers)
            ]
            for future in concurrent.futures.as_completed(futures):
                keys |= future.result()

    return [decode_key(key, n, r) for key in sorted(keys)]


def census(
    n: int,
    r: int,
    workers: Optional[int] = None,
    budget: Optional[int] = None
) -> OrbitCensus:
    """
    Count the isomorphism classes of Omega(n, r).

    Args:
        n (int): Number of cells, within CANONICAL_FORM_CAP
        r (int): Degree
        workers (Optional[int]): Worker processes, defaults to ORACLE_WORKERS
        budget (Optional[int]): Largest allowed |Omega|, defaults to OMEGA_BUDGET

    Returns:
        OrbitCensus: Totals and the reduction breakdown of the connected classes

    Raises:
        BudgetExceededError: If |Omega(n, r)| is above the budget
        UnsupportedSizeError: If n is above the canonical form cap
    """
    logger.info(f"Census of Omega({n},{r}) started")
    classes = canonical_classes(n, r, workers=workers, budget=budget)

    connected = 0
    minimal = 0
    breakdown: Counter = Counter()
    for matrix in classes:
        G = Network(matrix)
        if not is_connected(G):
            continue
        connected += 1
        if is_reduced(G):
            minimal += 1
        reduced, _ = reduce(G)
        breakdown[canonical_form(reduced)] += 1

    result = OrbitCensus(
        n=n,
        r=r,
        total_orbits=len(classes),
        connected_orbits=connected,
        minimal_connected_orbits=minimal,
        class_breakdown=dict(sorted(breakdown.items())),
        representatives=tuple(classes),
    )
    logger.info(f"Census of Omega({n},{r}) finished: {result.to_dict()}")
    return result


@lru_cache(maxsize=32)
def cached_census(
    n: int,
    r: int,
    workers: Optional[int] = None,
    budget: Optional[int] = None
) -> OrbitCensus:
    """census() memoized on its arguments; verification reuses lower-degree censuses."""
    return census(n, r, workers=workers, budget=budget)


def isomorphism_classes(
    n: int,
    r: int,
    connected: bool = False,
    minimal: bool = False,
    workers: Optional[int] = None,
    budget: Optional[int] = None
) -> List[Network]:
    """
    One canonical representative per isomorphism class, optionally filtered.

    The filters compose: connected keeps weakly connected classes, minimal
    keeps reduced ones.

    Args:
        n (int): Number of cells
        r (int): Degree
        connected (bool, optional): Keep only connected classes
        minimal (bool, optional): Keep only reduced classes
        workers (Optional[int]): Worker processes, defaults to ORACLE_WORKERS
        budget (Optional[int]): Largest allowed |Omega|, defaults to OMEGA_BUDGET

    Returns:
        List[Network]: Representatives sorted by canonical form
    """
    result = []
    for matrix in canonical_classes(n, r, workers=workers, budget=budget):
        G = Network(matrix)
        if connected and not is_connected(G):
            continue
        if minimal and not is_reduced(G):
            continue
        result.append(G)
    return result
