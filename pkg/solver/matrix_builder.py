"""
Builds and queries the ternary membership matrix.

Each constraint writes fixed cells (inclusion -> IN, exclusion -> OUT,
difference -> IN and OUT); no inference chains exist, so the result does
not depend on constraint order. Writing the opposite of a determinate
cell is a hard error.
"""

from typing import Iterator, List, Optional, Tuple

import numpy as np

from config import Config
from core.errors import CapExceededError, ContradictionError, InvalidInstanceError
from core.models import SCPInstance
from utils import get_logger
from validators import validate
from .ternary import SetDescription, TernaryMatrix, TernaryValue, Variant

logger = get_logger(__name__)


def build_matrix(instance: SCPInstance) -> TernaryMatrix:
    """
    Apply the instance's constraints to an all-UNCERTAIN matrix.

    Args:
        instance: A valid instance

    Returns:
        TernaryMatrix with provenance for every determinate cell

    Raises:
        InvalidInstanceError: If the instance fails validation
        ContradictionError: On the first constraint that flips a determinate cell
    """
    result = validate(instance)
    if not result.is_valid:
        raise InvalidInstanceError(result)

    rows = {element: i for i, element in enumerate(instance.universe)}
    columns = {set_name: j for j, set_name in enumerate(instance.sets)}
    entries = np.zeros(instance.shape, dtype=np.int8)
    provenance = {}

    for index, constraint in enumerate(instance.constraints):
        for element, set_name, is_member in constraint.assertions():
            value = TernaryValue.IN if is_member else TernaryValue.OUT
            i, j = rows[element], columns[set_name]
            current = TernaryValue(int(entries[i, j]))

            if current == TernaryValue.UNCERTAIN:
                entries[i, j] = value
                provenance[(element, set_name)] = index
            elif current != value:
                first = provenance[(element, set_name)]
                logger.info(f"Contradiction at ({element}, {set_name}): constraints #{first} and #{index}")
                raise ContradictionError(
                    element, set_name, first, index, current, value,
                    first_text=str(instance.constraints[first]),
                    conflicting_text=str(constraint),
                )

    matrix = TernaryMatrix(instance.universe, instance.sets, entries, provenance)
    logger.info(
        f"Built {matrix.shape[0]}x{matrix.shape[1]} matrix: "
        f"{len(provenance)} determinate, {matrix.uncertain_count} uncertain cells"
    )
    return matrix


def describe_set(matrix: TernaryMatrix, set_name: str) -> SetDescription:
    """
    Partition the universe by one column of the matrix.

    Raises:
        UnknownSetError: If set_name is not a column
    """
    column = matrix.column(set_name)
    members, non_members, uncertain = [], [], []
    for element, code in zip(matrix.elements, column):
        if code == TernaryValue.IN:
            members.append(element)
        elif code == TernaryValue.OUT:
            non_members.append(element)
        else:
            uncertain.append(element)
    return SetDescription(set_name, tuple(members), tuple(non_members), tuple(uncertain))


def iter_variants(matrix: TernaryMatrix, set_name: str, cap: Optional[int] = None) -> Iterator[Variant]:
    """
    Lazily yield the 2^|u| variants of a set in index order.

    The cap is checked before the first variant is produced.

    Raises:
        UnknownSetError: If set_name is not a column
        CapExceededError: If the set has more uncertain elements than cap
    """
    cap = Config.VARIANT_CAP if cap is None else cap
    description = describe_set(matrix, set_name)
    uncertain = description.uncertain
    u = len(uncertain)
    if u > cap:
        raise CapExceededError(f"variants of set '{set_name}'", u, cap)

    order = {element: i for i, element in enumerate(matrix.elements)}
    logger.debug(f"Enumerating {2 ** u} variants of {set_name}")

    def generate():
        for index in range(2 ** u):
            included = [element for bit, element in enumerate(uncertain)
                        if (index >> (u - 1 - bit)) & 1]
            members = sorted(description.members + tuple(included), key=order.__getitem__)
            yield Variant(set_name, index, tuple(members))

    return generate()


def enumerate_variants(matrix: TernaryMatrix, set_name: str, cap: Optional[int] = None) -> List[Variant]:
    """All variants of a set, X-0 .. X-(2^|u|-1). See iter_variants."""
    return list(iter_variants(matrix, set_name, cap))


def uncertain_cells(matrix: TernaryMatrix) -> List[Tuple[str, str]]:
    """UNCERTAIN cells in row-major order (universe order, then set order)."""
    positions = np.argwhere(matrix.entries == TernaryValue.UNCERTAIN)
    return [(matrix.elements[i], matrix.sets[j]) for i, j in positions]


def binary_table(matrix: TernaryMatrix) -> List[List[Optional[int]]]:
    """
    Classical binary-table view: IN -> 1, OUT -> 0, UNCERTAIN -> None.

    A binary table has no value for an unresolved cell; None marks the gap.
    """
    mapping = {TernaryValue.IN: 1, TernaryValue.OUT: 0, TernaryValue.UNCERTAIN: None}
    return [[mapping[TernaryValue(int(code))] for code in row] for row in matrix.entries]
