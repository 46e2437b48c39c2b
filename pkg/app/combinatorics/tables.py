"""
Count tables for the H, K and M families.

This module fills (n, r) grids of exact counts and renders them as CSV,
markdown or JSON with pandas.
"""
import concurrent.futures
import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import pandas as pd

from app.combinatorics.counting import FAMILIES, NetworkCounter, default_counter
from app.config.settings import Settings
from app.utils.logger import get_logger
from app.utils.validation import Validator, InternalConsistencyError

logger = get_logger(__name__)
settings = Settings()

TABLE_FORMATS = ('csv', 'markdown', 'json')


@dataclass
class CountTable:
    """
    Exact counts for one family.

    Attributes:
        family (str): One of 'H', 'K', 'M'
        entries (Dict[Tuple[int, int], int]): (n, r) -> count
    """
    family: str
    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        Validator.validate_choice(self.family, FAMILIES, "family")

    @property
    def max_n(self) -> int:
        return max((n for n, _ in self.entries), default=0)

    @property
    def max_r(self) -> int:
        return max((r for _, r in self.entries), default=0)

    def __getitem__(self, key: Tuple[int, int]) -> int:
        return self.entries[key]

    def to_frame(self) -> pd.DataFrame:
        """
        Grid view with rows n and columns r.

        Values are kept as Python ints (object dtype) so nothing is rounded.

        Returns:
            pd.DataFrame: Table indexed by n with one column per r
        """
        rows = range(1, self.max_n + 1)
        columns = range(1, self.max_r + 1)
        data = [[self.entries[(n, r)] for r in columns] for n in rows]
        df = pd.DataFrame(data, index=list(rows), columns=list(columns), dtype=object)
        df.index.name = 'n/r'
        return df

    def to_csv(self) -> str:
        """Header 'n/r,1,2,...' then one line per n."""
        return self.to_frame().to_csv(lineterminator='\n')

    def to_markdown(self) -> str:
        """Markdown grid (rendered through tabulate)."""
        return self.to_frame().to_markdown() + '\n'

    def to_json(self) -> str:
        """Compact JSON document {"family", "n", "r", "values"}."""
        document = {
            'family': self.family,
            'n': list(range(1, self.max_n + 1)),
            'r': list(range(1, self.max_r + 1)),
            'values': self.to_frame().values.tolist(),
        }
        return json.dumps(document, separators=(',', ':')) + '\n'

    def render(self, fmt: str = 'csv') -> str:
        """
        Render the table.

        Args:
            fmt (str): One of 'csv', 'markdown', 'json'

        Returns:
            str: Rendered table ending with a newline
        """
        Validator.validate_choice(fmt, TABLE_FORMATS, "format")
        if fmt == 'csv':
            return self.to_csv()
        if fmt == 'markdown':
            return self.to_markdown()
        return self.to_json()

    def check_ordering(self, others: List['CountTable']) -> None:
        """
        Assert H >= K >= M entrywise for n >= 2 across tables of the same shape.

        Args:
            others (List[CountTable]): Tables of the other families

        Raises:
            InternalConsistencyError: If the ordering is violated
        """
        tables = {t.family: t for t in [self] + list(others)}
        order = [tables[f] for f in FAMILIES if f in tables]
        for (n, r) in self.entries:
            if n < 2:
                continue
            values = [t.entries[(n, r)] for t in order]
            if any(v < 0 for v in values) or values != sorted(values, reverse=True):
                raise InternalConsistencyError(f"count ordering violated at ({n},{r}): {values}")


def fill_table(
    family: str,
    max_n: int,
    max_r: int,
    workers: Optional[int] = None,
    counter: Optional[NetworkCounter] = None
) -> CountTable:
    """
    Fill rows n = 1..max_n, columns r = 1..max_r for one family.

    H entries are independent. K is filled column by column (its recursion
    runs over n) and M row by row (its recursion runs over r), so each task
    only needs values from its own column or row. Results do not depend on
    the worker count.

    Args:
        family (str): One of 'H', 'K', 'M'
        max_n (int): Largest cell count
        max_r (int): Largest degree
        workers (Optional[int]): Thread count, defaults to TABLE_WORKERS
        counter (Optional[NetworkCounter]): Evaluator, defaults to the shared one

    Returns:
        CountTable: The filled table
    """
    Validator.validate_choice(family, FAMILIES, "family")
    Validator.validate_positive_int(max_n, "max_n")
    Validator.validate_positive_int(max_r, "max_r")
    workers = workers or settings.TABLE_WORKERS
    counter = counter or default_counter

    if family == 'H':
        tasks = [[(n, r)] for n in range(1, max_n + 1) for r in range(1, max_r + 1)]
    elif family == 'K':
        tasks = [[(n, r) for n in range(1, max_n + 1)] for r in range(1, max_r + 1)]
    else:
        tasks = [[(n, r) for r in range(1, max_r + 1)] for n in range(1, max_n + 1)]

    def run(cells: List[Tuple[int, int]]) -> Dict[Tuple[int, int], int]:
        return {(n, r): counter.count(family, n, r) for n, r in cells}

    logger.info(f"Filling {family} table {max_n}x{max_r} with {workers} worker(s)")
    table = CountTable(family)

    if workers == 1:
        for cells in tasks:
            table.entries.update(run(cells))
    else:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
            for result in executor.map(run, tasks):
                table.entries.update(result)

    logger.info(f"Filled {family} table with {len(table.entries)} entries")
    return table
