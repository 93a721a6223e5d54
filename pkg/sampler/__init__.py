"""
Qubit register sampling.
"""

from .assignment import Assignment, Membership
from .register import QubitRegister, prepare, round_stream, measure_bits, measure_all
from .sampling import (
    SampleTally,
    SampleReport,
    complexity_report,
    default_max_rounds,
    tally_rounds,
    sample_until,
    sample_frequencies,
    sample_assignments
)

__all__ = [
    'Assignment',
    'Membership',
    'QubitRegister',
    'prepare',
    'round_stream',
    'measure_bits',
    'measure_all',
    'SampleTally',
    'SampleReport',
    'complexity_report',
    'default_max_rounds',
    'tally_rounds',
    'sample_until',
    'sample_frequencies',
    'sample_assignments'
]
