"""
Instance validation package for the SCP Toolkit.
"""

from .instance_validator import (
    Finding,
    FindingKind,
    InstanceValidator,
    ValidationResult,
    validate
)

__all__ = ['Finding', 'FindingKind', 'InstanceValidator', 'ValidationResult', 'validate']
