"""
Exception hierarchy for the SCP Toolkit.

Every failure raised by the toolkit derives from SCPError, so the CLI can
map each kind onto its exit code.
"""

from typing import Optional, Sequence, Tuple


class SCPError(Exception):
    """Base class for all toolkit errors."""


class ParseError(SCPError, ValueError):
    """Lexical, syntax or declaration error in a constraint document."""

    def __init__(self, message: str, line: int, column: int):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class InvalidInstanceError(SCPError, ValueError):
    """An instance failed validation; carries the full report."""

    def __init__(self, result):
        self.result = result
        errors = "; ".join(result.errors)
        super().__init__(f"Instance failed validation ({len(result.errors)} errors): {errors}")


class UnknownSetError(SCPError, KeyError):
    """A query named a set that is not a column of the matrix."""

    def __init__(self, set_name: str, known: Sequence[str] = ()):
        self.set_name = set_name
        self.known = tuple(known)
        super().__init__(set_name)

    def __str__(self):
        if self.known:
            return f"Unknown set '{self.set_name}' (known sets: {', '.join(self.known)})"
        return f"Unknown set '{self.set_name}'"


class ContradictionError(SCPError):
    """Two constraints assert opposite values for the same cell."""

    def __init__(self, element: str, set_name: str, first_index: int, conflicting_index: int,
                 first_value, conflicting_value,
                 first_text: Optional[str] = None, conflicting_text: Optional[str] = None):
        self.element = element
        self.set_name = set_name
        self.first_index = first_index
        self.conflicting_index = conflicting_index
        self.first_value = first_value
        self.conflicting_value = conflicting_value
        first = f"constraint #{first_index}" + (f" ({first_text})" if first_text else "")
        conflicting = f"constraint #{conflicting_index}" + (
            f" ({conflicting_text})" if conflicting_text else "")
        super().__init__(
            f"Contradiction at ({element}, {set_name}): {first} asserts {first_value.name} "
            f"but {conflicting} asserts {conflicting_value.name}"
        )


class CapExceededError(SCPError):
    """An enumeration would exceed its configured size cap."""

    def __init__(self, what: str, requested: int, cap: int):
        self.what = what
        self.requested = requested
        self.cap = cap
        super().__init__(
            f"{what}: {requested} uncertain positions exceed the cap of {cap} "
            f"(2^{requested} results); raise the cap to enumerate"
        )


class UnreachableTargetError(SCPError, ValueError):
    """A sampling target contradicts one or more determinate cells."""

    def __init__(self, conflicts: Sequence[Tuple[str, str]]):
        self.conflicts = tuple(conflicts)
        cells = ", ".join(f"({e}, {s})" for e, s in self.conflicts)
        super().__init__(f"Target is unreachable: it contradicts determinate cells {cells}")


class DimensionMismatchError(SCPError, ValueError):
    """An assignment does not cover the grid it is checked against."""


class SampleOutsideCompletionsError(SCPError):
    """A sampled assignment is not a consistent completion (sampler bug)."""

    def __init__(self, sample_index: int, detail: str = ""):
        self.sample_index = sample_index
        message = f"Sample #{sample_index} is not a member of the completion set"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class InsufficientSamplesError(SCPError, ValueError):
    """Too few samples for a meaningful goodness-of-fit test."""

    def __init__(self, sample_count: int, required: int):
        self.sample_count = sample_count
        self.required = required
        super().__init__(
            f"Goodness-of-fit needs at least {required} samples (10 per completion), got {sample_count}"
        )
