"""
JSON document format for networks.

    {"cells": n, "in_adjacency": [[row 0], ..., [row n-1]]}

in_adjacency[i][j] is the number of arcs from cell j into cell i. Parse
errors are reported as MalformedNetworkError with the offending location.
"""
import json
from pathlib import Path
from typing import Any, Dict, Union

from app.network.network import Network, degree
from app.utils.logger import get_logger
from app.utils.validation import MalformedNetworkError

logger = get_logger(__name__)


def to_document(G: Network) -> Dict[str, Any]:
    """Network as a JSON-ready dict, rows in index order."""
    return {'cells': G.n, 'in_adjacency': [list(row) for row in G.adj]}


def dumps(G: Network) -> str:
    """Compact single-line JSON for G."""
    return json.dumps(to_document(G), separators=(',', ':'))


def from_document(document: Any, allow_zero_degree: bool = False, source: str = '<document>') -> Network:
    """
    Build a network from a parsed JSON document.

    Args:
        document (Any): Parsed JSON value
        allow_zero_degree (bool, optional): Accept networks with no arcs
        source (str, optional): Name used in diagnostics

    Returns:
        Network: The network

    Raises:
        MalformedNetworkError: With the location of the first problem found
    """
    if not isinstance(document, dict):
        raise MalformedNetworkError(f"{source}: top level must be an object")
    for key in ('cells', 'in_adjacency'):
        if key not in document:
            raise MalformedNetworkError(f"{source}: missing key '{key}'")

    cells = document['cells']
    rows = document['in_adjacency']
    if not isinstance(cells, int) or isinstance(cells, bool) or cells < 1:
        raise MalformedNetworkError(f"{source}: 'cells' must be a positive integer, got {cells!r}")
    if not isinstance(rows, list):
        raise MalformedNetworkError(f"{source}: 'in_adjacency' must be a list of rows")
    if len(rows) != cells:
        raise MalformedNetworkError(
            f"{source}: 'in_adjacency' has {len(rows)} rows but 'cells' is {cells}"
        )

    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise MalformedNetworkError(f"{source}: in_adjacency[{i}] is not a list")
        if len(row) != cells:
            raise MalformedNetworkError(
                f"{source}: in_adjacency[{i}] has {len(row)} entries, expected {cells}"
            )
        for j, entry in enumerate(row):
            if not isinstance(entry, int) or isinstance(entry, bool):
                raise MalformedNetworkError(
                    f"{source}: in_adjacency[{i}][{j}] is not an integer: {entry!r}"
                )
            if entry < 0:
                raise MalformedNetworkError(f"{source}: in_adjacency[{i}][{j}] is negative: {entry}")

    network = Network(tuple(tuple(row) for row in rows))
    try:
        r = degree(network)
    except MalformedNetworkError as e:
        raise MalformedNetworkError(f"{source}: {e}") from e
    if r == 0 and not allow_zero_degree:
        raise MalformedNetworkError(f"{source}: network has degree 0")
    return network


def loads(text: str, allow_zero_degree: bool = False, source: str = '<string>') -> Network:
    """
    Parse a network from JSON text.

    Raises:
        MalformedNetworkError: On invalid JSON (with line and column) or an invalid document
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedNetworkError(f"{source}:{e.lineno}:{e.colno}: {e.msg}") from e
    return from_document(document, allow_zero_degree=allow_zero_degree, source=source)


def load_file(path: Union[str, Path], allow_zero_degree: bool = False) -> Network:
    """Read and parse a UTF-8 network document from a file."""
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as e:
        raise MalformedNetworkError(f"{path}: cannot read file ({e.strerror})") from e
    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as e:
        raise MalformedNetworkError(f"{path}: byte {e.start}: not valid UTF-8 ({e.reason})") from e
    logger.debug(f"Loaded network document from {path}")
    return loads(text, allow_zero_degree=allow_zero_degree, source=str(path))
