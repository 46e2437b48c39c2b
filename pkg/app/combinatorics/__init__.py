"""
Exact counting of identical-edge homogeneous networks.
"""
from .partitions import Partition, partitions, class_size
from .powerseries import TruncatedSeries, phi_series, phi_coeff
from .counting import (
    FAMILIES, NetworkCounter, count, count_all, count_connected,
    count_disconnected, count_minimal, euler_totient, multiset_coefficient,
)
from .tables import CountTable, TABLE_FORMATS, fill_table

__all__ = [
    # Partitions
    'Partition',
    'partitions',
    'class_size',

    # Power series
    'TruncatedSeries',
    'phi_series',
    'phi_coeff',

    # Counting
    'FAMILIES',
    'NetworkCounter',
    'count',
    'count_all',
    'count_connected',
    'count_disconnected',
    'count_minimal',
    'euler_totient',
    'multiset_coefficient',

    # Tables
    'CountTable',
    'TABLE_FORMATS',
    'fill_table',
]
