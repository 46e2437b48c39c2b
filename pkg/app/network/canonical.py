"""
Canonical forms and isomorphism for small networks.

The canonical form is the lexicographically least row-major reading of
P*A*P^T over all cell permutations P. It is found by exhaustive search with
prefix pruning; the configured cap (default 8 cells) bounds the search at 8!
candidates.
"""
from typing import List, Optional

from app.config.settings import Settings
from app.network.network import Matrix, Network, degree
from app.utils.logger import get_logger
from app.utils.validation import Validator, UnsupportedSizeError

logger = get_logger(__name__)
settings = Settings()


def check_size(G: Network) -> None:
    """Raise UnsupportedSizeError when G has more cells than CANONICAL_FORM_CAP."""
    Validator.validate_int_range(
        G.n, 1, settings.CANONICAL_FORM_CAP, "number of cells",
        error_class=UnsupportedSizeError
    )


def canonical_form(G: Network) -> Matrix:
    """
    Lexicographically least relabelling of the adjacency matrix.

    Cells are placed one at a time; once cells p[0..k] are fixed, the first
    k + 1 entries of row 0 are known and a branch whose prefix already exceeds
    the best candidate is abandoned. Complete candidates are compared row by
    row and dropped at the first larger row.

    Args:
        G (Network): Network with at most CANONICAL_FORM_CAP cells

    Returns:
        Matrix: The canonical adjacency matrix

    Raises:
        UnsupportedSizeError: If G is above the size cap
    """
    check_size(G)
    A = G.adj
    n = G.n
    best: List[Optional[Matrix]] = [None]
    perm: List[int] = []
    used = [False] * n

    def leaf() -> None:
        current = best[0]
        rows = []
        smaller = current is None
        for i in range(n):
            source = A[perm[i]]
            row = tuple(source[perm[j]] for j in range(n))
            if not smaller:
                if row > current[i]:
                    return
                if row < current[i]:
                    smaller = True
            rows.append(row)
        if smaller:
            best[0] = tuple(rows)

    def extend() -> None:
        depth = len(perm)
        if depth == n:
            leaf()
            return
        current = best[0]
        for cell in range(n):
            if used[cell]:
                continue
            perm.append(cell)
            if current is not None:
                first = A[perm[0]]
                prefix = tuple(first[p] for p in perm)
                if prefix > current[0][:depth + 1]:
                    perm.pop()
                    continue
            used[cell] = True
            extend()
            used[cell] = False
            perm.pop()

    extend()
    return best[0]


def canonical_network(G: Network) -> Network:
    """The canonical relabelling of G as a Network."""
    return Network(canonical_form(G))


def are_isomorphic(G1: Network, G2: Network) -> bool:
    """
    True when G2 is a relabelling of G1.

    Args:
        G1 (Network): First network
        G2 (Network): Second network

    Returns:
        bool: Same cell count and equal canonical forms
    """
    check_size(G1)
    check_size(G2)
    if G1.n != G2.n or degree(G1) != degree(G2):
        return False
    return canonical_form(G1) == canonical_form(G2)
