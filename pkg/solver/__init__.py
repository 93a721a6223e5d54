"""
Ternary membership matrix solver.
"""

from .ternary import TernaryValue, TernaryMatrix, SetDescription, Variant
from .matrix_builder import (
    build_matrix,
    describe_set,
    iter_variants,
    enumerate_variants,
    uncertain_cells,
    binary_table
)

__all__ = [
    'TernaryValue',
    'TernaryMatrix',
    'SetDescription',
    'Variant',
    'build_matrix',
    'describe_set',
    'iter_variants',
    'enumerate_variants',
    'uncertain_cells',
    'binary_table'
]
