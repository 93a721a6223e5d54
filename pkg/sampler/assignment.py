"""
Complete binary membership outcomes over the elements x sets grid.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Mapping, Sequence, Tuple

import numpy as np

from core.errors import DimensionMismatchError
from quantum.states import MEMBER_BIT, NON_MEMBER_BIT
from solver.ternary import TernaryMatrix, TernaryValue

Cell = Tuple[str, str]


class Membership(Enum):
    MEMBER = MEMBER_BIT
    NON_MEMBER = NON_MEMBER_BIT


_DETERMINATE_BITS = {TernaryValue.IN: MEMBER_BIT, TernaryValue.OUT: NON_MEMBER_BIT}


def _is_bit(value: Any) -> bool:
    """Exactly the integer 0 or 1; bools, floats and strings are not bits."""
    if isinstance(value, (bool, np.bool_)) or not isinstance(value, (int, np.integer)):
        return False
    return value in (MEMBER_BIT, NON_MEMBER_BIT)


@dataclass(frozen=True)
class Assignment:
    """
    One measured value per cell, row-major: bit 0 = member, 1 = non-member.

    Hashable and comparable, so distinct outcomes can be counted directly.
    """
    elements: Tuple[str, ...]
    sets: Tuple[str, ...]
    bits: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'elements', tuple(self.elements))
        object.__setattr__(self, 'sets', tuple(self.sets))
        bits = tuple(self.bits)
        if len(bits) != len(self.elements) * len(self.sets):
            raise DimensionMismatchError(
                f"Assignment has {len(bits)} bits for a "
                f"{len(self.elements)}x{len(self.sets)} grid"
            )
        for bit in bits:
            if not _is_bit(bit):
                raise ValueError(f"Assignment bits must be 0 (member) or 1 (non-member), got {bit!r}")
        object.__setattr__(self, 'bits', tuple(int(b) for b in bits))

    def _offset(self, element: str, set_name: str) -> int:
        try:
            return self.elements.index(element) * len(self.sets) + self.sets.index(set_name)
        except ValueError:
            raise KeyError(f"Cell ({element}, {set_name}) is not in the grid") from None

    def membership(self, element: str, set_name: str) -> Membership:
        return Membership(self.bits[self._offset(element, set_name)])

    def __getitem__(self, cell: Cell) -> Membership:
        return self.membership(*cell)

    def cells(self) -> List[Cell]:
        return [(e, s) for e in self.elements for s in self.sets]

    def as_mapping(self) -> Dict[Cell, Membership]:
        return {cell: Membership(bit) for cell, bit in zip(self.cells(), self.bits)}

    def members_of(self, set_name: str) -> Tuple[str, ...]:
        """Elements measured as members of one set, universe order."""
        return tuple(e for e in self.elements if self.membership(e, set_name) is Membership.MEMBER)

    def flipped(self, element: str, set_name: str) -> 'Assignment':
        bits = list(self.bits)
        offset = self._offset(element, set_name)
        bits[offset] = 1 - bits[offset]
        return Assignment(self.elements, self.sets, tuple(bits))

    def same_grid(self, elements: Sequence[str], sets: Sequence[str]) -> bool:
        return self.elements == tuple(elements) and self.sets == tuple(sets)

    def conflicts_with(self, matrix: TernaryMatrix) -> List[Cell]:
        """Determinate cells of the matrix this assignment disagrees with."""
        if not self.same_grid(matrix.elements, matrix.sets):
            raise DimensionMismatchError("Assignment grid does not match the matrix")
        conflicts = []
        for (element, set_name, value), bit in zip(matrix.cells(), self.bits):
            expected = _DETERMINATE_BITS.get(value)
            if expected is not None and expected != bit:
                conflicts.append((element, set_name))
        return conflicts

    def to_rows(self) -> List[List[int]]:
        width = len(self.sets)
        return [list(self.bits[i * width:(i + 1) * width]) for i in range(len(self.elements))]

    def to_dict(self) -> Dict[str, Any]:
        """JSON schema shared by target files and oracle output: per-element bit rows."""
        return {'elements': list(self.elements), 'sets': list(self.sets), 'bits': self.to_rows()}

    @classmethod
    def from_dict(cls, document: Mapping[str, Any]) -> 'Assignment':
        try:
            elements = tuple(document['elements'])
            sets = tuple(document['sets'])
            rows = document['bits']
        except (KeyError, TypeError) as e:
            raise ValueError(f"Assignment document is missing a field: {e}") from None
        if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
            raise ValueError("Assignment bits must be a list of per-element rows")
        if len(rows) != len(elements) or any(len(row) != len(sets) for row in rows):
            raise DimensionMismatchError(
                f"Assignment rows do not form a {len(elements)}x{len(sets)} grid")
        return cls(elements, sets, tuple(bit for row in rows for bit in row))

    @classmethod
    def from_mapping(cls, elements: Sequence[str], sets: Sequence[str],
                     mapping: Mapping[Cell, Membership]) -> 'Assignment':
        bits = []
        for element in elements:
            for set_name in sets:
                if (element, set_name) not in mapping:
                    raise DimensionMismatchError(f"Mapping does not cover ({element}, {set_name})")
                bits.append(mapping[(element, set_name)].value)
        return cls(tuple(elements), tuple(sets), tuple(bits))

    def __str__(self):
        return " ".join(
            f"{element}:{''.join(str(b) for b in row)}"
            for element, row in zip(self.elements, self.to_rows())
        )
