"""
Ternary membership values and the dense elements x sets matrix.
"""

from dataclasses import dataclass, field
from enum import IntEnum
from types import MappingProxyType
from typing import Any, Dict, Iterator, Mapping, Tuple

import numpy as np
import pandas as pd

from core.errors import UnknownSetError
from utils import format_group


class TernaryValue(IntEnum):
    """Membership of one element in one set. Codes are fixed for serialization."""
    IN = 1
    UNCERTAIN = 0
    OUT = -1


@dataclass(frozen=True, eq=False)
class TernaryMatrix:
    """
    Dense |universe| x |sets| matrix of TernaryValue codes.

    Rows follow universe order, columns follow set order. `provenance` maps
    every determinate cell to the index of the constraint that first set it;
    it is bookkeeping only and does not take part in equality.
    """
    elements: Tuple[str, ...]
    sets: Tuple[str, ...]
    entries: np.ndarray
    provenance: Mapping[Tuple[str, str], int] = field(default_factory=dict)
    _rows: Dict[str, int] = field(init=False, repr=False)
    _columns: Dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        shape = (len(self.elements), len(self.sets))
        raw = np.asarray(self.entries)
        if raw.size == 0 and shape[0] * shape[1] == 0:
            raw = np.zeros(shape, dtype=np.int8)
        if raw.shape != shape:
            raise ValueError(
                f"entries shape {raw.shape} does not match "
                f"{shape[0]} elements x {shape[1]} sets"
            )
        # raw values, before the int8 cast
        if raw.dtype.kind not in 'iu' or not np.isin(raw, (-1, 0, 1)).all():
            raise ValueError("entries must only contain the integer codes -1, 0 and 1")
        entries = raw.astype(np.int8, copy=True)
        entries.setflags(write=False)

        object.__setattr__(self, 'elements', tuple(self.elements))
        object.__setattr__(self, 'sets', tuple(self.sets))
        object.__setattr__(self, 'entries', entries)
        object.__setattr__(self, 'provenance', MappingProxyType(dict(self.provenance)))
        object.__setattr__(self, '_rows', {e: i for i, e in enumerate(self.elements)})
        object.__setattr__(self, '_columns', {s: j for j, s in enumerate(self.sets)})

    @classmethod
    def uncertain(cls, elements, sets) -> 'TernaryMatrix':
        """All-UNCERTAIN matrix over the given labels."""
        return cls(tuple(elements), tuple(sets), np.zeros((len(elements), len(sets)), dtype=np.int8))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    def row_index(self, element: str) -> int:
        try:
            return self._rows[element]
        except KeyError:
            raise KeyError(f"Unknown element '{element}'") from None

    def column_index(self, set_name: str) -> int:
        try:
            return self._columns[set_name]
        except KeyError:
            raise UnknownSetError(set_name, self.sets) from None

    def value(self, element: str, set_name: str) -> TernaryValue:
        return TernaryValue(int(self.entries[self.row_index(element), self.column_index(set_name)]))

    def column(self, set_name: str) -> np.ndarray:
        return self.entries[:, self.column_index(set_name)]

    def cells(self) -> Iterator[Tuple[str, str, TernaryValue]]:
        """All cells in row-major order."""
        for i, element in enumerate(self.elements):
            for j, set_name in enumerate(self.sets):
                yield element, set_name, TernaryValue(int(self.entries[i, j]))

    @property
    def uncertain_count(self) -> int:
        return int(np.count_nonzero(self.entries == TernaryValue.UNCERTAIN))

    def __eq__(self, other):
        if not isinstance(other, TernaryMatrix):
            return NotImplemented
        return (self.elements == other.elements
                and self.sets == other.sets
                and np.array_equal(self.entries, other.entries))

    __hash__ = None

    def to_dict(self) -> Dict[str, Any]:
        """JSON schema: elements, sets, row-major entries with codes 1/0/-1."""
        return {
            'elements': list(self.elements),
            'sets': list(self.sets),
            'entries': self.entries.tolist(),
        }

    @classmethod
    def from_dict(cls, document: Mapping[str, Any]) -> 'TernaryMatrix':
        return cls(tuple(document['elements']), tuple(document['sets']), np.array(document['entries']))

    def to_frame(self) -> pd.DataFrame:
        """elements x sets DataFrame of codes."""
        return pd.DataFrame(self.entries, index=list(self.elements), columns=list(self.sets))


@dataclass(frozen=True)
class SetDescription:
    """Three-way partition of the universe for one set, each part in universe order."""
    set: str
    members: Tuple[str, ...]
    non_members: Tuple[str, ...]
    uncertain: Tuple[str, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'set': self.set,
            'members': list(self.members),
            'non_members': list(self.non_members),
            'uncertain': list(self.uncertain),
        }

    def __str__(self):
        return (f"{self.set}: in {format_group(self.members)}; "
                f"out {format_group(self.non_members)}; "
                f"uncertain {format_group(self.uncertain)}")


@dataclass(frozen=True)
class Variant:
    """
    One determinate version of a set.

    Bits of `index` run over the set's uncertain elements in universe
    order, first uncertain element most significant; bit 1 includes it.
    """
    set: str
    index: int
    members: Tuple[str, ...]

    @property
    def name(self) -> str:
        return f"{self.set}-{self.index}"

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'index': self.index, 'members': list(self.members)}

    def __str__(self):
        return f"{self.name} = {format_group(self.members)}"
