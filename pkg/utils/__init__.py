"""
Utilities module for the SCP Toolkit.
"""

from .logger import setup_logger, get_logger
from .helpers import (
    format_percentage,
    is_valid_identifier,
    format_cell,
    format_group
)

__all__ = [
    'setup_logger',
    'get_logger',
    'format_percentage',
    'is_valid_identifier',
    'format_cell',
    'format_group'
]
