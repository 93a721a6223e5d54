"""
Helper utility functions for the SCP Toolkit.
"""

import re
from typing import Iterable, Optional

_IDENTIFIER_PATTERN = re.compile(r'\w+')


def format_percentage(value: Optional[float], decimals: int = 2) -> str:
    """
    Format a number as percentage.

    Args:
        value: The value to format (e.g., 0.5 for 50%)
        decimals: Number of decimal places

    Returns:
        Formatted percentage string
    """
    if value is None:
        return 'N/A'

    return f"{value * 100:.{decimals}f}%"


def is_valid_identifier(name: str) -> bool:
    """
    Check that a name is a legal element or set identifier.

    Identifiers are nonempty runs of letters, digits and underscores.
    """
    if not name:
        return False

    return _IDENTIFIER_PATTERN.fullmatch(name) is not None


def format_cell(element: str, set_name: str) -> str:
    """Key for a matrix cell in reports: 'element:set'."""
    return f"{element}:{set_name}"


def format_group(names: Iterable[str]) -> str:
    """Render names as '{a, b, c}'."""
    return "{" + ", ".join(names) + "}"
