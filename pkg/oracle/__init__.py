"""
Brute-force oracle: completions, constraint checking and distribution tests.
"""

from .completions import (
    CompletionSet,
    enumerate_completions,
    satisfies,
    sweep_satisfying,
    project_completions
)
from .distribution import GoodnessOfFitReport, observed_counts, distribution_check

__all__ = [
    'CompletionSet',
    'enumerate_completions',
    'satisfies',
    'sweep_satisfying',
    'project_completions',
    'GoodnessOfFitReport',
    'observed_counts',
    'distribution_check'
]
