"""
Core SCP data model, DSL parser and instance generators.
"""

from .errors import (
    SCPError,
    ParseError,
    InvalidInstanceError,
    UnknownSetError,
    ContradictionError,
    CapExceededError,
    UnreachableTargetError,
    DimensionMismatchError,
    SampleOutsideCompletionsError,
    InsufficientSamplesError
)
from .models import (
    ElementId,
    SetId,
    Constraint,
    Inclusion,
    Exclusion,
    Difference,
    SCPInstance
)
from .parser import parse_scp, load_scp, render_scp

__all__ = [
    'SCPError',
    'ParseError',
    'InvalidInstanceError',
    'UnknownSetError',
    'ContradictionError',
    'CapExceededError',
    'UnreachableTargetError',
    'DimensionMismatchError',
    'SampleOutsideCompletionsError',
    'InsufficientSamplesError',
    'ElementId',
    'SetId',
    'Constraint',
    'Inclusion',
    'Exclusion',
    'Difference',
    'SCPInstance',
    'parse_scp',
    'load_scp',
    'render_scp'
]
