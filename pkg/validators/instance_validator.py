"""
Instance Validator for the SCP Toolkit.
Checks an SCPInstance against every model invariant and reports all violations.
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

from core.models import Difference, SCPInstance
from utils import get_logger, is_valid_identifier

logger = get_logger(__name__)


class FindingKind(Enum):
    EMPTY_UNIVERSE = 'empty-universe'
    EMPTY_SETS = 'empty-sets'
    INVALID_IDENTIFIER = 'invalid-identifier'
    DUPLICATE_ELEMENT = 'duplicate-element'
    DUPLICATE_SET = 'duplicate-set'
    SHARED_IDENTIFIER = 'shared-identifier'
    UNKNOWN_ELEMENT = 'unknown-element'
    UNKNOWN_SET = 'unknown-set'
    SELF_DIFFERENCE = 'self-difference'
    DUPLICATE_CONSTRAINT = 'duplicate-constraint'


@dataclass(frozen=True)
class Finding:
    kind: FindingKind
    message: str
    constraint_index: Optional[int] = None

    def to_dict(self):
        return {
            'kind': self.kind.value,
            'message': self.message,
            'constraint_index': self.constraint_index,
        }


class ValidationResult:
    """Container for validation results."""

    def __init__(self, subject: str = 'instance'):
        self.subject = subject
        self.is_valid = True
        self.findings: List[Finding] = []
        self.warning_findings: List[Finding] = []

    @property
    def errors(self) -> List[str]:
        return [f.message for f in self.findings]

    @property
    def warnings(self) -> List[str]:
        return [f.message for f in self.warning_findings]

    @property
    def is_empty(self) -> bool:
        """True when there is nothing at all to report."""
        return not self.findings and not self.warning_findings

    def add_error(self, kind: FindingKind, message: str, constraint_index: Optional[int] = None):
        """Add an error finding."""
        self.findings.append(Finding(kind, message, constraint_index))
        self.is_valid = False
        logger.debug(f"{self.subject}: {message}")

    def add_warning(self, kind: FindingKind, message: str, constraint_index: Optional[int] = None):
        """Add a warning finding."""
        self.warning_findings.append(Finding(kind, message, constraint_index))
        logger.debug(f"{self.subject}: warning: {message}")

    def count(self, kind: FindingKind) -> int:
        return sum(1 for f in self.findings + self.warning_findings if f.kind == kind)

    def to_dict(self):
        return {
            'valid': self.is_valid,
            'errors': [f.to_dict() for f in self.findings],
            'warnings': [f.to_dict() for f in self.warning_findings],
        }

    def __str__(self):
        status = "VALID" if self.is_valid else "INVALID"
        result = f"Validation Result for {self.subject}: {status}\n"

        if self.errors:
            result += f"\nErrors ({len(self.errors)}):\n"
            for error in self.errors:
                result += f"  - {error}\n"

        if self.warnings:
            result += f"\nWarnings ({len(self.warnings)}):\n"
            for warning in self.warnings:
                result += f"  - {warning}\n"

        return result


class InstanceValidator:
    """
    Validates SCP instances.

    Checks:
    - Universe and set family are nonempty
    - Identifiers are well-formed and unique per namespace
    - No name is used as both an element and a set
    - Constraints reference declared identifiers only
    - Differences name two distinct sets
    - Repeated identical constraints (warning only)
    """

    def validate(self, instance: SCPInstance, subject: str = 'instance') -> ValidationResult:
        """
        Validate an instance.

        Args:
            instance: The instance to check
            subject: Label used in log lines and the report header

        Returns:
            ValidationResult with every violation found
        """
        result = ValidationResult(subject)

        self._validate_declarations(instance, result)
        self._validate_constraints(instance, result)

        if result.is_valid:
            logger.debug(f"Validation passed for {subject}: {instance}")
        else:
            logger.info(f"Validation failed for {subject}: {len(result.errors)} errors")
        return result

    def _validate_declarations(self, instance: SCPInstance, result: ValidationResult):
        """Validate universe and set family declarations."""
        if not instance.universe:
            result.add_error(FindingKind.EMPTY_UNIVERSE, "Universe is empty")
        if not instance.sets:
            result.add_error(FindingKind.EMPTY_SETS, "Set family is empty")

        for name in list(instance.universe) + list(instance.sets):
            if not is_valid_identifier(name):
                result.add_error(FindingKind.INVALID_IDENTIFIER, f"Invalid identifier {name!r}")

        for name, count in Counter(instance.universe).items():
            if count > 1:
                result.add_error(FindingKind.DUPLICATE_ELEMENT,
                                 f"Element '{name}' is declared {count} times")

        for name, count in Counter(instance.sets).items():
            if count > 1:
                result.add_error(FindingKind.DUPLICATE_SET,
                                 f"Set '{name}' is declared {count} times")

        shared = [name for name in dict.fromkeys(instance.sets) if name in set(instance.universe)]
        for name in shared:
            result.add_error(FindingKind.SHARED_IDENTIFIER,
                             f"Identifier '{name}' is declared as both an element and a set")

    def _validate_constraints(self, instance: SCPInstance, result: ValidationResult):
        """Validate each constraint against the declarations."""
        elements = set(instance.universe)
        sets = set(instance.sets)
        seen = {}

        for index, constraint in enumerate(instance.constraints):
            element_refs, set_refs = constraint.references()

            for element in element_refs:
                if element not in elements:
                    result.add_error(FindingKind.UNKNOWN_ELEMENT,
                                     f"Constraint #{index} ({constraint}) references unknown element '{element}'",
                                     index)
            for set_name in dict.fromkeys(set_refs):
                if set_name not in sets:
                    result.add_error(FindingKind.UNKNOWN_SET,
                                     f"Constraint #{index} ({constraint}) references unknown set '{set_name}'",
                                     index)

            if isinstance(constraint, Difference) and constraint.in_set == constraint.not_in_set:
                result.add_error(FindingKind.SELF_DIFFERENCE,
                                 f"Constraint #{index} is a self-difference ({constraint})",
                                 index)

            if constraint in seen:
                result.add_warning(FindingKind.DUPLICATE_CONSTRAINT,
                                   f"Constraint #{index} ({constraint}) repeats constraint #{seen[constraint]}",
                                   index)
            else:
                seen[constraint] = index


def validate(instance: SCPInstance) -> ValidationResult:
    """Validate an instance with a default InstanceValidator."""
    return InstanceValidator().validate(instance)
