"""
Identical-edge homogeneous networks and the operations that preserve ODE equivalence.

A network on n cells is stored as its in-adjacency matrix: adj[i][j] is the
number of arcs from cell j into cell i, so homogeneity is a constant row sum.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import networkx as nx
import numpy as np

from app.utils.logger import get_logger
from app.utils.validation import Validator, ValidationError, MalformedNetworkError

logger = get_logger(__name__)

Matrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class Network:
    """
    Directed multigraph with loops, given by its in-adjacency matrix.

    Attributes:
        adj (Matrix): Square matrix of nonnegative ints, adj[i][j] = arcs j -> i
    """
    adj: Matrix

    def __post_init__(self):
        if not isinstance(self.adj, tuple) or not self.adj:
            raise MalformedNetworkError("adjacency must be a non-empty tuple of rows")
        n = len(self.adj)
        for i, row in enumerate(self.adj):
            if not isinstance(row, tuple) or len(row) != n:
                raise MalformedNetworkError(
                    f"row {i} has {len(row) if isinstance(row, tuple) else 'no'} entries, expected {n}"
                )
            for j, entry in enumerate(row):
                if not isinstance(entry, int) or isinstance(entry, bool):
                    raise MalformedNetworkError(f"entry [{i}][{j}] is not an integer: {entry!r}")
                if entry < 0:
                    raise MalformedNetworkError(f"entry [{i}][{j}] is negative: {entry}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> 'Network':
        """
        Build a network from any nested sequence, numpy arrays included.

        Args:
            rows (Sequence[Sequence[int]]): Square matrix of arc counts

        Returns:
            Network: The network
        """
        matrix = []
        for row in rows:
            converted = []
            for entry in row:
                if isinstance(entry, np.integer):
                    entry = int(entry)
                converted.append(entry)
            matrix.append(tuple(converted))
        return cls(tuple(matrix))

    @property
    def n(self) -> int:
        """Number of cells."""
        return len(self.adj)

    @property
    def matrix(self) -> np.ndarray:
        """Adjacency as an int64 numpy array (a fresh copy)."""
        return np.array(self.adj, dtype=np.int64)

    def __str__(self) -> str:
        return str([list(row) for row in self.adj])


@dataclass(frozen=True)
class ReductionTrace:
    """
    What reduce() removed.

    Attributes:
        loops_removed (int): Loops taken off every cell (minimum diagonal entry)
        divisor (int): gcd the remaining multiplicities were divided by
    """
    loops_removed: int
    divisor: int

    def to_dict(self) -> dict:
        return {'loops_removed': self.loops_removed, 'divisor': self.divisor}


def degree(G: Network) -> int:
    """
    Common row sum of the in-adjacency matrix.

    Args:
        G (Network): Network

    Returns:
        int: The degree r

    Raises:
        MalformedNetworkError: If the row sums differ
    """
    sums = {sum(row) for row in G.adj}
    if len(sums) != 1:
        raise MalformedNetworkError(
            f"row sums differ: {[sum(row) for row in G.adj]}"
        )
    return sums.pop()


def add_loops(G: Network, s: int) -> Network:
    """Add s loops to every cell (adj + s*Id)."""
    Validator.validate_nonnegative_int(s, "s")
    if s == 0:
        return G
    return Network.from_rows(G.matrix + s * np.eye(G.n, dtype=np.int64))


def split_edges(G: Network, k: int) -> Network:
    """Replace every arc by k parallel copies (k*adj)."""
    Validator.validate_positive_int(k, "k")
    if k == 1:
        return G
    return Network.from_rows(k * G.matrix)


def relabel(G: Network, perm: Sequence[int]) -> Network:
    """
    Relabel cells: adj'[i][j] = adj[perm[i]][perm[j]].

    Args:
        G (Network): Network
        perm (Sequence[int]): Permutation of 0..n-1

    Returns:
        Network: The relabelled network
    """
    if sorted(perm) != list(range(G.n)):
        raise ValidationError(f"{list(perm)} is not a permutation of 0..{G.n - 1}")
    return Network(tuple(tuple(G.adj[p][q] for q in perm) for p in perm))


def _multiplicity_gcd(A: np.ndarray) -> int:
    positive = A[A > 0]
    if positive.size == 0:
        return 1
    return int(np.gcd.reduce(positive))


def reduce(G: Network) -> Tuple[Network, ReductionTrace]:
    """
    Reduce a network to the minimal member of its ODE-equivalence class.

    Removes s = min diagonal loops from every cell, then divides all
    multiplicities by their gcd d. split_edges(., d) followed by add_loops(., s)
    rebuilds G. A network made only of loops reduces to degree 0.

    Args:
        G (Network): Network

    Returns:
        Tuple[Network, ReductionTrace]: Reduced network and the (s, d) removed

    Raises:
        MalformedNetworkError: If G is not homogeneous
    """
    degree(G)
    A = G.matrix
    s = int(np.diagonal(A).min())
    A = A - s * np.eye(G.n, dtype=np.int64)
    d = _multiplicity_gcd(A)
    reduced = G if (s == 0 and d == 1) else Network.from_rows(A // d)
    return reduced, ReductionTrace(s, d)


def is_reduced(G: Network) -> bool:
    """
    True when some cell has no loop and the multiplicities have gcd 1.

    Degree-0 networks count as reduced (empty gcd taken as 1).
    """
    A = G.matrix
    return bool((np.diagonal(A) == 0).any()) and _multiplicity_gcd(A) == 1


def is_connected(G: Network) -> bool:
    """
    Weak connectivity of the underlying undirected graph, loops ignored.

    Single-cell networks are connected.
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(G.n))
    graph.add_edges_from(
        (i, j) for i, row in enumerate(G.adj) for j, entry in enumerate(row)
        if entry and i != j
    )
    return nx.is_connected(graph)


def pencil_matrix(G: Network, a: Fraction, b: Fraction) -> List[List[Fraction]]:
    """
    The linear admissible map a*Id + b*A of the network, exactly.

    Args:
        G (Network): Network with adjacency A
        a (Fraction): Internal-dynamics coefficient
        b (Fraction): Coupling coefficient

    Returns:
        List[List[Fraction]]: The matrix a*Id + b*A
    """
    a, b = Fraction(a), Fraction(b)
    return [
        [b * entry + (a if i == j else 0) for j, entry in enumerate(row)]
        for i, row in enumerate(G.adj)
    ]


def two_cell_network(r: int, k: int) -> Network:
    """
    Two cells: cell 0 gets r - k loops and k arcs from cell 1, cell 1 gets r arcs from cell 0.

    For r >= 2 it is reduced exactly when gcd(r, k) == 1.

    Args:
        r (int): Degree, r >= 1
        k (int): Arcs from cell 1 into cell 0, 0 <= k <= r

    Returns:
        Network: The network [[r - k, k], [r, 0]]
    """
    Validator.validate_positive_int(r, "r")
    Validator.validate_int_range(k, 0, r, "k")
    return Network(((r - k, k), (r, 0)))


def equivalent_expansions(G: Network, r: int) -> List[Network]:
    """
    The degree-r networks ODE-equivalent to a reduced network G.

    For G of degree s these are add_loops(split_edges(G, k), r - k*s) for
    k = 1..floor(r/s); any mix of loop-adjoining and k-splitting collapses to
    one of them because splitting after adding a loop equals splitting and
    then adding k loops.

    Args:
        G (Network): Reduced network of degree s >= 1
        r (int): Target degree, r >= s

    Returns:
        List[Network]: floor(r/s) networks, in increasing k
    """
    s = degree(G)
    if s < 1:
        raise ValidationError("a degree-0 network has no expansions")
    if not is_reduced(G):
        raise ValidationError(f"{G} is not reduced")
    Validator.validate_int_range(r, s, None, "r")
    return [add_loops(split_edges(G, k), r - k * s) for k in range(1, r // s + 1)]
