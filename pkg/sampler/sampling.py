"""
Repeated measurement rounds over a qubit register.

A round is one full-register preparation plus measurement: m x n
preparations and m x n measurements. Rounds are numbered from 1 and are
independent given (seed, round), so tallies over disjoint round ranges
can be merged in any order.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from config import Config
from core.errors import DimensionMismatchError, UnreachableTargetError
from quantum.states import MEMBER_BIT
from utils import format_cell, get_logger
from .assignment import Assignment
from .register import QubitRegister, measure_bits

logger = get_logger(__name__)


@dataclass(frozen=True)
class SampleTally:
    """Per-uncertain-cell member counts over some set of rounds."""
    rounds: int
    member_counts: Tuple[int, ...]

    @classmethod
    def empty(cls, register: QubitRegister) -> 'SampleTally':
        return cls(0, (0,) * register.uncertain_count)

    def merge(self, other: 'SampleTally') -> 'SampleTally':
        """Associative, commutative combination of two tallies."""
        if len(self.member_counts) != len(other.member_counts):
            raise ValueError("Cannot merge tallies over different registers")
        return SampleTally(
            self.rounds + other.rounds,
            tuple(a + b for a, b in zip(self.member_counts, other.member_counts)),
        )


@dataclass(frozen=True)
class SampleReport:
    """Outcome and accounting of a sampling run."""
    rounds: int
    target: Optional[Assignment]
    hit: bool
    per_cell_frequency: Dict[Tuple[str, str], float]
    measurement_count: int
    preparation_count: int
    seed: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            'rounds': self.rounds,
            'hit': self.hit,
            'per_cell_frequency': {format_cell(e, s): f for (e, s), f in self.per_cell_frequency.items()},
            'preparations': self.preparation_count,
            'measurements': self.measurement_count,
            'seed': self.seed,
        }


def complexity_report(register: QubitRegister, rounds: int) -> Tuple[int, int]:
    """
    (preparations, measurements) for a number of rounds: m x n each per round.

    Raises:
        ValueError: If rounds is negative
    """
    if rounds < 0:
        raise ValueError("rounds must be non-negative")
    return rounds * register.size, rounds * register.size


def default_max_rounds(uncertain_count: int) -> int:
    """2^(u+4), capped at the configured ceiling."""
    return min(2 ** (uncertain_count + 4), Config.MAX_ROUNDS_CEILING)


def _member_mask(register: QubitRegister, bits: np.ndarray) -> np.ndarray:
    return (bits[register.uncertain_indices] == MEMBER_BIT).astype(np.int64)


def tally_rounds(register: QubitRegister, seed: int, round_numbers: Iterable[int]) -> SampleTally:
    """Tally member outcomes of the uncertain cells over the given rounds."""
    counts = np.zeros(register.uncertain_count, dtype=np.int64)
    rounds = 0
    for round_number in round_numbers:
        counts += _member_mask(register, measure_bits(register, seed, round_number))
        rounds += 1
    return SampleTally(rounds, tuple(int(c) for c in counts))


def _report(register: QubitRegister, tally: SampleTally, seed: int,
            target: Optional[Assignment], hit: bool) -> SampleReport:
    preparations, measurements = complexity_report(register, tally.rounds)
    frequencies = {
        cell: (count / tally.rounds if tally.rounds else 0.0)
        for cell, count in zip(register.uncertain_cells(), tally.member_counts)
    }
    return SampleReport(
        rounds=tally.rounds,
        target=target,
        hit=hit,
        per_cell_frequency=frequencies,
        measurement_count=measurements,
        preparation_count=preparations,
        seed=seed,
    )


def sample_until(register: QubitRegister, target: Assignment, seed: int,
                 max_rounds: Optional[int] = None, progress: bool = False) -> SampleReport:
    """
    Run rounds 1..max_rounds until the measured Assignment equals target.

    Args:
        register: Prepared register
        target: Complete assignment consistent with every determinate cell
        seed: Stream seed
        max_rounds: Round budget (default: default_max_rounds(u))
        progress: Show a tqdm progress bar

    Returns:
        SampleReport over the rounds actually run; hit tells whether target was seen

    Raises:
        DimensionMismatchError: If target is over a different grid
        UnreachableTargetError: If target contradicts a determinate cell
    """
    if not target.same_grid(register.elements, register.sets):
        raise DimensionMismatchError("Target assignment grid does not match the register")
    conflicts = target.conflicts_with(register.to_ternary())
    if conflicts:
        raise UnreachableTargetError(conflicts)

    if max_rounds is None:
        max_rounds = default_max_rounds(register.uncertain_count)
    if max_rounds < 1:
        raise ValueError("max_rounds must be at least 1")

    target_bits = np.array(target.bits, dtype=np.uint8)
    counts = np.zeros(register.uncertain_count, dtype=np.int64)
    rounds = 0
    hit = False

    for round_number in tqdm(range(1, max_rounds + 1), desc="Sampling", unit="round",
                             disable=not progress, leave=False):
        bits = measure_bits(register, seed, round_number)
        counts += _member_mask(register, bits)
        rounds = round_number
        if np.array_equal(bits, target_bits):
            hit = True
            break

    tally = SampleTally(rounds, tuple(int(c) for c in counts))
    if hit:
        logger.debug(f"Target hit at round {rounds} (seed {seed})")
    else:
        logger.debug(f"Target not hit within {max_rounds} rounds (seed {seed})")
    return _report(register, tally, seed, target, hit)


def sample_frequencies(register: QubitRegister, seed: int, rounds: int,
                       progress: bool = False) -> SampleReport:
    """
    Target-free run of exactly `rounds` rounds, reporting member frequencies.

    Raises:
        ValueError: If rounds < 1
    """
    if rounds < 1:
        raise ValueError("rounds must be at least 1")
    round_numbers = tqdm(range(1, rounds + 1), desc="Sampling", unit="round",
                         disable=not progress, leave=False)
    tally = tally_rounds(register, seed, round_numbers)
    logger.info(f"Sampled {rounds} rounds over {register.uncertain_count} uncertain cells (seed {seed})")
    return _report(register, tally, seed, None, False)


def sample_assignments(register: QubitRegister, seed: int, rounds: int) -> List[Assignment]:
    """Measured Assignments of rounds 1..rounds, in round order."""
    return [
        Assignment(register.elements, register.sets, tuple(measure_bits(register, seed, r).tolist()))
        for r in range(1, rounds + 1)
    ]
