"""
Single-qubit cell states.

Only three real product states exist here: |0> (member), |1> (non-member)
and the equal superposition (1/sqrt2)(|0>+|1>). A measured bit of 0 means
member, 1 means non-member.
"""

from enum import Enum
from math import sqrt
from typing import Tuple

from solver.ternary import TernaryValue

SQRT1_2 = 1 / sqrt(2)
NORMALIZATION_TOLERANCE = 1e-12

MEMBER_BIT = 0
NON_MEMBER_BIT = 1


class CellState(Enum):
    IN_STATE = 'in'
    OUT_STATE = 'out'
    SUPERPOSED = 'superposed'

    @property
    def amplitudes(self) -> Tuple[float, float]:
        """(amp0, amp1)"""
        return _AMPLITUDES[self]

    @property
    def nonmember_probability(self) -> float:
        """Born probability of measuring 1 (non-member): amp1^2."""
        # SQRT1_2 ** 2 rounds to 0.5000000000000001
        if self is CellState.SUPERPOSED:
            return 0.5
        return self.amplitudes[1] ** 2

    @property
    def is_determinate(self) -> bool:
        return self is not CellState.SUPERPOSED

    @property
    def ket(self) -> str:
        """ASCII ket label used in tables and expressions."""
        return _KETS[self]

    @classmethod
    def from_ternary(cls, value: TernaryValue) -> 'CellState':
        return _FROM_TERNARY[TernaryValue(value)]

    def to_ternary(self) -> TernaryValue:
        return _TO_TERNARY[self]


_AMPLITUDES = {
    CellState.IN_STATE: (1.0, 0.0),
    CellState.OUT_STATE: (0.0, 1.0),
    CellState.SUPERPOSED: (SQRT1_2, SQRT1_2),
}

_KETS = {
    CellState.IN_STATE: '|0>',
    CellState.OUT_STATE: '|1>',
    CellState.SUPERPOSED: '(1/sqrt2)(|0>+|1>)',
}

_FROM_TERNARY = {
    TernaryValue.IN: CellState.IN_STATE,
    TernaryValue.OUT: CellState.OUT_STATE,
    TernaryValue.UNCERTAIN: CellState.SUPERPOSED,
}

_TO_TERNARY = {state: value for value, state in _FROM_TERNARY.items()}
