"""
Data model for Set Constraint Problems.

An instance is a universe of elements, a family of named sets and an
ordered list of element-level constraints. Declaration order is part of
the model: it fixes matrix row/column order and variant bit order.
"""

from dataclasses import dataclass
from typing import NewType, Tuple, Union

ElementId = NewType('ElementId', str)
SetId = NewType('SetId', str)

# (element, set, is_member)
CellAssertion = Tuple[str, str, bool]


@dataclass(frozen=True)
class Inclusion:
    """x in S"""
    element: str
    set: str

    def assertions(self) -> Tuple[CellAssertion, ...]:
        return ((self.element, self.set, True),)

    def references(self) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
        return (self.element,), (self.set,)

    def __str__(self):
        return f"{self.element} in {self.set}"


@dataclass(frozen=True)
class Exclusion:
    """x !in S"""
    element: str
    set: str

    def assertions(self) -> Tuple[CellAssertion, ...]:
        return ((self.element, self.set, False),)

    def references(self) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
        return (self.element,), (self.set,)

    def __str__(self):
        return f"{self.element} !in {self.set}"


@dataclass(frozen=True)
class Difference:
    """x in S_i \\ S_j, i.e. x in S_i and x not in S_j."""
    element: str
    in_set: str
    not_in_set: str

    def assertions(self) -> Tuple[CellAssertion, ...]:
        return ((self.element, self.in_set, True), (self.element, self.not_in_set, False))

    def references(self) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
        return (self.element,), (self.in_set, self.not_in_set)

    def __str__(self):
        return f"{self.in_set} \\ {self.not_in_set} = {{{self.element}}}"


Constraint = Union[Inclusion, Exclusion, Difference]


@dataclass(frozen=True)
class SCPInstance:
    """
    A Set Constraint Problem instance.

    Construction does not enforce the invariants (nonempty, unique, known
    identifiers); run validators.validate() to check them. Every downstream
    operation rejects an instance that fails validation.
    """
    universe: Tuple[str, ...]
    sets: Tuple[str, ...]
    constraints: Tuple[Constraint, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'universe', tuple(self.universe))
        object.__setattr__(self, 'sets', tuple(self.sets))
        object.__setattr__(self, 'constraints', tuple(self.constraints))

    @property
    def shape(self) -> Tuple[int, int]:
        """(number of elements, number of sets)"""
        return len(self.universe), len(self.sets)

    @property
    def cell_count(self) -> int:
        return len(self.universe) * len(self.sets)

    def with_constraints(self, constraints) -> 'SCPInstance':
        """Same universe and sets, different constraint list."""
        return SCPInstance(self.universe, self.sets, tuple(constraints))

    def __str__(self):
        return (f"SCPInstance({len(self.universe)} elements, {len(self.sets)} sets, "
                f"{len(self.constraints)} constraints)")
