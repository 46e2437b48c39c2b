"""
Network algebra: representation, reduction, isomorphism and ODE equivalence.
"""
from .network import (
    Matrix, Network, ReductionTrace, add_loops, degree, equivalent_expansions,
    is_connected, is_reduced, pencil_matrix, reduce, relabel, split_edges,
    two_cell_network,
)
from .canonical import are_isomorphic, canonical_form, canonical_network
from .equivalence import are_ode_equivalent, linear_equiv_oracle, pencil_coefficients
from .codec import dumps, from_document, load_file, loads, to_document

__all__ = [
    # Representation
    'Matrix',
    'Network',
    'ReductionTrace',
    'degree',

    # Operations
    'add_loops',
    'split_edges',
    'relabel',
    'reduce',
    'is_reduced',
    'is_connected',
    'pencil_matrix',
    'two_cell_network',
    'equivalent_expansions',

    # Isomorphism and equivalence
    'canonical_form',
    'canonical_network',
    'are_isomorphic',
    'are_ode_equivalent',
    'linear_equiv_oracle',
    'pencil_coefficients',

    # JSON documents
    'to_document',
    'from_document',
    'dumps',
    'loads',
    'load_file',
]
