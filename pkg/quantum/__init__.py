"""
Quantum representation of the membership matrix.
"""

from .states import CellState, SQRT1_2, MEMBER_BIT, NON_MEMBER_BIT, NORMALIZATION_TOLERANCE
from .quantum_matrix import (
    QuantumMatrix,
    SetExpression,
    lift,
    set_expression,
    render_expression,
    render_universe,
    render_family
)

__all__ = [
    'CellState',
    'SQRT1_2',
    'MEMBER_BIT',
    'NON_MEMBER_BIT',
    'NORMALIZATION_TOLERANCE',
    'QuantumMatrix',
    'SetExpression',
    'lift',
    'set_expression',
    'render_expression',
    'render_universe',
    'render_family'
]
