"""
Brute-force ground truth for small instances.

Constraint checking here works straight from the constraint definitions
and never goes through build_matrix, so the solver and the oracle can
falsify each other.
"""

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, List, Optional, Set, Tuple

import pandas as pd

from config import Config
from core.errors import CapExceededError, DimensionMismatchError, UnknownSetError
from core.models import Difference, Exclusion, Inclusion, SCPInstance
from quantum.states import MEMBER_BIT, NON_MEMBER_BIT
from sampler.assignment import Assignment, Membership
from solver.matrix_builder import uncertain_cells
from solver.ternary import TernaryMatrix, TernaryValue
from utils import format_cell, get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class CompletionSet:
    """
    Every assignment extending the determinate cells, 2^u of them.

    Ordered lexicographically over the uncertain cells (row-major), with
    member (0) before non-member (1).
    """
    elements: Tuple[str, ...]
    sets: Tuple[str, ...]
    uncertain: Tuple[Tuple[str, str], ...]
    completions: Tuple[Assignment, ...]

    def __len__(self):
        return len(self.completions)

    def __iter__(self):
        return iter(self.completions)

    def __contains__(self, assignment):
        return assignment in self.index_of

    @cached_property
    def index_of(self) -> Dict[Assignment, int]:
        return {completion: i for i, completion in enumerate(self.completions)}

    def to_dict(self) -> Dict[str, Any]:
        """JSON: completions as arrays of per-element bit rows."""
        return {
            'elements': list(self.elements),
            'sets': list(self.sets),
            'uncertain_cells': [list(cell) for cell in self.uncertain],
            'completions': [completion.to_rows() for completion in self.completions],
        }

    def to_frame(self) -> pd.DataFrame:
        """One row per completion, one 'e:S' bit column per cell in row-major order."""
        columns = [format_cell(e, s) for e in self.elements for s in self.sets]
        return pd.DataFrame([completion.bits for completion in self.completions], columns=columns)


def enumerate_completions(matrix: TernaryMatrix, cap: Optional[int] = None) -> CompletionSet:
    """
    All 2^u assignments that agree with the matrix's determinate cells.

    Raises:
        CapExceededError: If the matrix has more than cap uncertain cells
    """
    cap = Config.COMPLETION_CAP if cap is None else cap
    cells = uncertain_cells(matrix)
    u = len(cells)
    if u > cap:
        raise CapExceededError("joint completions", u, cap)

    base = [MEMBER_BIT if value == TernaryValue.IN else NON_MEMBER_BIT
            for _, _, value in matrix.cells()]
    width = len(matrix.sets)
    offsets = [matrix.row_index(e) * width + matrix.column_index(s) for e, s in cells]

    completions = []
    for choice in itertools.product((MEMBER_BIT, NON_MEMBER_BIT), repeat=u):
        bits = list(base)
        for offset, bit in zip(offsets, choice):
            bits[offset] = bit
        completions.append(Assignment(matrix.elements, matrix.sets, tuple(bits)))

    logger.info(f"Enumerated {len(completions)} completions over {u} uncertain cells")
    return CompletionSet(matrix.elements, matrix.sets, tuple(cells), tuple(completions))


def satisfies(assignment: Assignment, instance: SCPInstance) -> bool:
    """
    True iff every constraint of the instance holds under the assignment.

    Raises:
        DimensionMismatchError: If the assignment is over a different grid
    """
    if not assignment.same_grid(instance.universe, instance.sets):
        raise DimensionMismatchError(
            f"Assignment grid {len(assignment.elements)}x{len(assignment.sets)} does not match "
            f"instance grid {len(instance.universe)}x{len(instance.sets)}"
        )

    def member(element, set_name):
        return assignment.membership(element, set_name) is Membership.MEMBER

    for constraint in instance.constraints:
        if isinstance(constraint, Inclusion):
            holds = member(constraint.element, constraint.set)
        elif isinstance(constraint, Exclusion):
            holds = not member(constraint.element, constraint.set)
        elif isinstance(constraint, Difference):
            holds = (member(constraint.element, constraint.in_set)
                     and not member(constraint.element, constraint.not_in_set))
        else:
            raise TypeError(f"Unknown constraint type: {type(constraint).__name__}")
        if not holds:
            return False
    return True


def sweep_satisfying(instance: SCPInstance, cap: Optional[int] = None) -> List[Assignment]:
    """
    Every grid assignment satisfying the instance, by exhaustive 2^(n*k) sweep.

    Raises:
        CapExceededError: If the grid has more than cap cells
    """
    cap = Config.SWEEP_CAP if cap is None else cap
    cell_count = instance.cell_count
    if cell_count > cap:
        raise CapExceededError("exhaustive grid sweep", cell_count, cap)

    satisfying = []
    for bits in itertools.product((MEMBER_BIT, NON_MEMBER_BIT), repeat=cell_count):
        assignment = Assignment(instance.universe, instance.sets, bits)
        if satisfies(assignment, instance):
            satisfying.append(assignment)
    logger.debug(f"Swept {2 ** cell_count} assignments: {len(satisfying)} satisfy the instance")
    return satisfying


def project_completions(completions: CompletionSet, set_name: str) -> Set[Tuple[str, ...]]:
    """Distinct member tuples of one set's column across all completions."""
    if set_name not in completions.sets:
        raise UnknownSetError(set_name, completions.sets)
    return {completion.members_of(set_name) for completion in completions}
