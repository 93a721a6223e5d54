"""
Configuration module for the SCP Toolkit.
"""

from .config import Config

__all__ = ['Config']
