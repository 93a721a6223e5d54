"""
Quantum lift of the ternary matrix and formal set expressions.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterator, Sequence, Tuple

import numpy as np
import pandas as pd

from core.errors import UnknownSetError
from solver.ternary import TernaryMatrix
from utils import get_logger
from .states import CellState

logger = get_logger(__name__)

EMPTY_EXPRESSION = '(empty)'


@dataclass(frozen=True)
class QuantumMatrix:
    """Same rows and columns as the source TernaryMatrix, one CellState per cell."""
    elements: Tuple[str, ...]
    sets: Tuple[str, ...]
    states: Tuple[Tuple[CellState, ...], ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.elements), len(self.sets)

    def column_index(self, set_name: str) -> int:
        try:
            return self.sets.index(set_name)
        except ValueError:
            raise UnknownSetError(set_name, self.sets) from None

    def state(self, element: str, set_name: str) -> CellState:
        return self.states[self.elements.index(element)][self.column_index(set_name)]

    def cells(self) -> Iterator[Tuple[str, str, CellState]]:
        """All cells in row-major order."""
        for element, row in zip(self.elements, self.states):
            for set_name, state in zip(self.sets, row):
                yield element, set_name, state

    def to_ternary(self) -> TernaryMatrix:
        """Inverse of lift()."""
        entries = np.array([[state.to_ternary() for state in row] for row in self.states],
                           dtype=np.int8).reshape(self.shape)
        return TernaryMatrix(self.elements, self.sets, entries)

    def to_dict(self) -> Dict[str, Any]:
        """JSON schema: entries as "in" | "out" | "superposed"."""
        return {
            'elements': list(self.elements),
            'sets': list(self.sets),
            'entries': [[state.value for state in row] for row in self.states],
        }

    def to_frame(self) -> pd.DataFrame:
        """elements x sets DataFrame of ASCII ket labels."""
        return pd.DataFrame([[state.ket for state in row] for row in self.states],
                            index=list(self.elements), columns=list(self.sets))


@dataclass(frozen=True)
class SetExpression:
    """A set written as |0>.(members) + |1>.(non-members) + superposition.(uncertain)."""
    set: str
    in_group: Tuple[str, ...]
    out_group: Tuple[str, ...]
    superposed_group: Tuple[str, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'set': self.set,
            'in': list(self.in_group),
            'out': list(self.out_group),
            'superposed': list(self.superposed_group),
            'expression': render_expression(self),
        }


def lift(matrix: TernaryMatrix) -> QuantumMatrix:
    """Map IN -> |0>, OUT -> |1>, UNCERTAIN -> (1/sqrt2)(|0>+|1>) cell-wise."""
    states = tuple(
        tuple(CellState.from_ternary(int(code)) for code in row)
        for row in matrix.entries
    )
    logger.debug(f"Lifted {matrix.shape[0]}x{matrix.shape[1]} matrix to cell states")
    return QuantumMatrix(matrix.elements, matrix.sets, states)


def set_expression(qmatrix: QuantumMatrix, set_name: str) -> SetExpression:
    """
    Group the universe by the cell states of one column, universe order within groups.

    Raises:
        UnknownSetError: If set_name is not a column
    """
    j = qmatrix.column_index(set_name)
    groups = {state: [] for state in CellState}
    for element, row in zip(qmatrix.elements, qmatrix.states):
        groups[row[j]].append(element)
    return SetExpression(
        set_name,
        tuple(groups[CellState.IN_STATE]),
        tuple(groups[CellState.OUT_STATE]),
        tuple(groups[CellState.SUPERPOSED]),
    )


def render_expression(expr: SetExpression) -> str:
    """
    ASCII rendering, e.g. X = |0>.(a+d) + |1>.(b+c+f) + (1/sqrt2)(|0>+|1>).(e+g).

    Empty groups are omitted; with every group empty the result is 'X = (empty)'.
    """
    terms = [
        f"{state.ket}.({'+'.join(group)})"
        for state, group in (
            (CellState.IN_STATE, expr.in_group),
            (CellState.OUT_STATE, expr.out_group),
            (CellState.SUPERPOSED, expr.superposed_group),
        )
        if group
    ]
    return f"{expr.set} = {' + '.join(terms) if terms else EMPTY_EXPRESSION}"


def render_universe(elements: Sequence[str], name: str = 'U') -> str:
    """The universe as a sum of member kets: U = |0>.(a+b+...)."""
    return render_expression(SetExpression(name, tuple(elements), (), ()))


def render_family(sets: Sequence[str], name: str = 'S') -> str:
    """The set family as a sum of member kets: S = |0>.(X+Y+Z)."""
    return render_expression(SetExpression(name, tuple(sets), (), ()))
