"""
Brute-force oracle: enumeration of Omega(n, r), orbit census and verification reports.
"""
from .enumeration import (
    canonical_keys, check_budget, compositions, decode_key, enumerate_omega, omega_size,
)
from .census import OrbitCensus, census, isomorphism_classes
from .verification import (
    Check, VerificationReport, verify, verify_class_structure, verify_counts,
)

__all__ = [
    # Enumeration
    'omega_size',
    'check_budget',
    'compositions',
    'enumerate_omega',
    'canonical_keys',
    'decode_key',

    # Census
    'OrbitCensus',
    'census',
    'isomorphism_classes',

    # Verification
    'Check',
    'VerificationReport',
    'verify_counts',
    'verify_class_structure',
    'verify',
]
