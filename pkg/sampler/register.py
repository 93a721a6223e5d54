"""
Qubit register: one qubit per (element, set) cell, measured in full each round.

Every qubit is one of three fixed single-qubit states and the register is
a product state, so measuring it is exactly one independent Bernoulli draw
per cell with P(non-member) = amp1^2.
"""

from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from quantum.quantum_matrix import QuantumMatrix
from quantum.states import CellState
from solver.ternary import TernaryMatrix
from utils import get_logger
from .assignment import Assignment

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class QubitRegister:
    """Cells in row-major order with their prepared states."""
    elements: Tuple[str, ...]
    sets: Tuple[str, ...]
    cells: Tuple[Tuple[str, str, CellState], ...]
    preparation_count: int
    nonmember_probabilities: np.ndarray = field(init=False, repr=False)
    uncertain_indices: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        probabilities = np.array([state.nonmember_probability for _, _, state in self.cells],
                                 dtype=np.float64)
        probabilities.setflags(write=False)
        uncertain = np.array([i for i, (_, _, state) in enumerate(self.cells)
                              if state is CellState.SUPERPOSED], dtype=np.intp)
        uncertain.setflags(write=False)
        object.__setattr__(self, 'nonmember_probabilities', probabilities)
        object.__setattr__(self, 'uncertain_indices', uncertain)

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def uncertain_count(self) -> int:
        return len(self.uncertain_indices)

    def uncertain_cells(self) -> List[Tuple[str, str]]:
        return [self.cells[i][:2] for i in self.uncertain_indices]

    def to_ternary(self) -> TernaryMatrix:
        width = len(self.sets)
        rows = [[state.to_ternary() for _, _, state in self.cells[i * width:(i + 1) * width]]
                for i in range(len(self.elements))]
        return TernaryMatrix(self.elements, self.sets, np.array(rows, dtype=np.int8))


def prepare(qmatrix: QuantumMatrix) -> QubitRegister:
    """
    Prepare one qubit per cell in row-major order.

    Returns:
        QubitRegister with preparation_count = m x n
    """
    cells = tuple(qmatrix.cells())
    register = QubitRegister(qmatrix.elements, qmatrix.sets, cells, len(cells))
    logger.debug(
        f"Prepared register of {register.size} qubits "
        f"({register.uncertain_count} superposed)"
    )
    return register


def round_stream(seed: int, round_number: int) -> np.random.Generator:
    """
    Pseudo-random stream for one round, keyed by (seed, round).

    Draw i of the stream belongs to cell index i, so a round's outcome does
    not depend on which other rounds were run or in what order.
    """
    if seed < 0 or round_number < 0:
        raise ValueError("seed and round must be non-negative")
    return np.random.default_rng([seed, round_number])


def measure_bits(register: QubitRegister, seed: int, round_number: int) -> np.ndarray:
    """Measured bits (0 member, 1 non-member) for every cell, as a uint8 array."""
    draws = round_stream(seed, round_number).random(register.size)
    return (draws < register.nonmember_probabilities).astype(np.uint8)


def measure_all(register: QubitRegister, seed: int, round_number: int) -> Assignment:
    """
    Measure every qubit of the register once.

    Determinate cells always collapse to their fixed bit; each superposed
    cell is member or non-member with probability 1/2. The same
    (seed, round) always yields the same Assignment.
    """
    bits = measure_bits(register, seed, round_number)
    return Assignment(register.elements, register.sets, tuple(bits.tolist()))
