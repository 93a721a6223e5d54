"""
Goodness-of-fit of sampled assignments against the uniform law over completions.
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence

import numpy as np
from scipy import stats

from config import Config
from core.errors import InsufficientSamplesError, SampleOutsideCompletionsError
from sampler.assignment import Assignment
from utils import get_logger
from .completions import CompletionSet

logger = get_logger(__name__)

SAMPLES_PER_COMPLETION = 10


@dataclass(frozen=True)
class GoodnessOfFitReport:
    statistic: float
    degrees_of_freedom: int
    p_value: float
    significance: float
    passed: bool
    sample_count: int
    category_count: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            'test': 'chi-square',
            'statistic': self.statistic,
            'degrees_of_freedom': self.degrees_of_freedom,
            'p_value': self.p_value,
            'significance': self.significance,
            'passed': self.passed,
            'samples': self.sample_count,
            'categories': self.category_count,
        }


def observed_counts(samples: Sequence[Assignment], completions: CompletionSet) -> np.ndarray:
    """
    Count samples per completion, in completion order.

    Raises:
        SampleOutsideCompletionsError: On the first sample that is not a completion
    """
    index_of = completions.index_of
    counts = np.zeros(len(completions), dtype=np.int64)
    for i, sample in enumerate(samples):
        position = index_of.get(sample)
        if position is None:
            raise SampleOutsideCompletionsError(i, str(sample))
        counts[position] += 1
    return counts


def distribution_check(samples: Sequence[Assignment], completions: CompletionSet,
                       significance: Optional[float] = None) -> GoodnessOfFitReport:
    """
    Chi-square goodness-of-fit of the samples against uniform over completions.

    Args:
        samples: Sampled assignments, each a member of completions
        completions: Oracle completion set
        significance: Test level (default Config.SIGNIFICANCE)

    Returns:
        GoodnessOfFitReport; passed is True when p_value >= significance

    Raises:
        InsufficientSamplesError: If fewer than 10 samples per completion
        SampleOutsideCompletionsError: If a sample is not a completion (sampler bug)
    """
    significance = Config.SIGNIFICANCE if significance is None else significance
    required = SAMPLES_PER_COMPLETION * len(completions)
    if len(samples) < required:
        raise InsufficientSamplesError(len(samples), required)

    counts = observed_counts(samples, completions)
    dof = len(completions) - 1

    if dof == 0:
        # A single completion: every sample matches it, the fit is exact.
        statistic, p_value = 0.0, 1.0
    else:
        statistic, p_value = stats.chisquare(counts)
        statistic, p_value = float(statistic), float(p_value)

    report = GoodnessOfFitReport(
        statistic=statistic,
        degrees_of_freedom=dof,
        p_value=p_value,
        significance=significance,
        passed=p_value >= significance,
        sample_count=len(samples),
        category_count=len(completions),
    )
    logger.info(
        f"Chi-square over {len(completions)} completions: statistic={statistic:.3f}, "
        f"dof={dof}, p={p_value:.4g} -> {'pass' if report.passed else 'fail'}"
    )
    return report
