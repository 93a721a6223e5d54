"""
Analysis Engine for the SCP Toolkit.
Measures how many measurement rounds it takes to hit a fixed completion.

Each round costs exactly m x n preparations and measurements, but a fixed
target with u uncertain cells is hit with probability 2^-u per round, so
the expected number of rounds is 2^u. This engine reports that law
empirically over synthetic instances.
"""

from typing import Any, Dict, Iterable, List, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from core.generators import instance_with_uncertainty
from quantum import lift
from sampler import (
    QubitRegister,
    complexity_report,
    default_max_rounds,
    measure_all,
    prepare,
    sample_until
)
from solver import build_matrix
from utils import get_logger

logger = get_logger(__name__)

DEFAULT_TOLERANCE = 0.10


class RoundCountAnalyzer:
    """Rounds-to-target statistics per number of uncertain cells."""

    def __init__(self, trials: int = 1000, seed: int = 0, progress: bool = False,
                 tolerance: float = DEFAULT_TOLERANCE):
        """
        Initialize analyzer.

        Args:
            trials: Independent searches per u
            seed: Base seed; per-trial seeds are derived from (seed, u)
            progress: Show tqdm progress bars
            tolerance: Relative error accepted between mean rounds and 2^u
        """
        if trials < 1:
            raise ValueError("trials must be at least 1")
        self.trials = trials
        self.seed = seed
        self.progress = progress
        self.tolerance = tolerance

    def trial_seeds(self, u: int) -> List[int]:
        """Independent per-trial seeds derived from (seed, u)."""
        states = np.random.SeedSequence([self.seed, u]).generate_state(self.trials)
        return [int(s) for s in states]

    @staticmethod
    def register_for(u: int) -> QubitRegister:
        """Register of the synthetic instance with exactly u uncertain cells."""
        return prepare(lift(build_matrix(instance_with_uncertainty(u))))

    def rounds_to_target(self, u: int, register: QubitRegister) -> Tuple[np.ndarray, int]:
        """
        Rounds used by each trial on a register with u uncertain cells.

        Each trial draws its own consistent target (round 0 of its stream)
        and searches from round 1 on. Returns the rounds used per trial and
        the number of trials that exhausted their budget without a hit.
        """
        max_rounds = default_max_rounds(u)

        rounds = np.zeros(self.trials, dtype=np.int64)
        misses = 0
        seeds = self.trial_seeds(u)
        for i, trial_seed in enumerate(tqdm(seeds, desc=f"u={u}", unit="trial",
                                            disable=not self.progress, leave=False)):
            target = measure_all(register, trial_seed, 0)
            report = sample_until(register, target, trial_seed, max_rounds)
            rounds[i] = report.rounds
            misses += not report.hit

        if misses:
            logger.warning(f"u={u}: {misses}/{self.trials} trials exhausted {max_rounds} rounds")
        return rounds, misses

    def analyze_u(self, u: int) -> Dict[str, Any]:
        """
        Statistics for one value of u.

        Returns:
            Dict with mean/median/std rounds, expected 2^u, relative error,
            per-round cost, hit rate and whether the mean is within tolerance
        """
        logger.info(f"Analyzing u={u} over {self.trials} trials")
        register = self.register_for(u)
        rounds, misses = self.rounds_to_target(u, register)
        preparations, measurements = complexity_report(register, 1)

        expected = 2 ** u
        mean = float(np.mean(rounds))
        relative_error = (mean - expected) / expected

        return {
            'u': u,
            'trials': self.trials,
            'expected_rounds': expected,
            'mean_rounds': round(mean, 3),
            'median_rounds': float(np.median(rounds)),
            'std_rounds': round(float(np.std(rounds)), 3),
            'relative_error': round(relative_error, 4),
            'within_tolerance': abs(relative_error) <= self.tolerance,
            'hit_rate': round((self.trials - misses) / self.trials, 4),
            'register_size': register.size,
            'preparations_per_round': preparations,
            'measurements_per_round': measurements,
        }

    def run_analysis(self, u_values: Iterable[int]) -> Dict[str, Any]:
        """
        Run the study over several u.

        Returns:
            Dict with the study parameters and one result row per u
        """
        results = [self.analyze_u(u) for u in u_values]
        passed = sum(1 for r in results if r['within_tolerance'])
        logger.info(f"Round-count study complete: {passed}/{len(results)} rows within tolerance")
        return {
            'trials': self.trials,
            'seed': self.seed,
            'tolerance': self.tolerance,
            'results': results,
        }

    @staticmethod
    def to_frame(analysis: Dict[str, Any]) -> pd.DataFrame:
        """Result rows as a DataFrame indexed by u."""
        return pd.DataFrame(analysis['results']).set_index('u')
