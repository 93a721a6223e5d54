"""
Configuration management for the SCP Toolkit.
Loads settings from environment variables using python-dotenv.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
env_path = Path(__file__).parent.parent / '.env'
load_dotenv(dotenv_path=env_path)


class Config:
    """
    Configuration class that holds all application settings.
    Settings are loaded from environment variables with sensible defaults.
    """

    # ============================================
    # ENUMERATION LIMITS
    # ============================================
    # Uncertain elements per set before enumerate_variants refuses (2^20 ~ 1M variants)
    VARIANT_CAP = int(os.getenv('SCP_VARIANT_CAP', 20))
    # Uncertain cells before enumerate_completions refuses
    COMPLETION_CAP = int(os.getenv('SCP_COMPLETION_CAP', 20))
    # Grid cells for the exhaustive 2^(n*k) sweep
    SWEEP_CAP = int(os.getenv('SCP_SWEEP_CAP', 16))

    # ============================================
    # SAMPLING CONFIGURATION
    # ============================================
    DEFAULT_SEED = int(os.getenv('SCP_DEFAULT_SEED', 0))
    MAX_ROUNDS_CEILING = int(os.getenv('SCP_MAX_ROUNDS_CEILING', 2 ** 30))
    SIGNIFICANCE = float(os.getenv('SCP_SIGNIFICANCE', 0.001))
    SHOW_PROGRESS = os.getenv('SCP_SHOW_PROGRESS', 'false').lower() == 'true'

    # ============================================
    # EXPORT CONFIGURATION
    # ============================================
    EXPORT_PATH = Path(os.getenv('EXPORT_PATH', './exports/'))

    @classmethod
    def ensure_export_directory(cls):
        """Create export directory if it doesn't exist."""
        cls.EXPORT_PATH.mkdir(parents=True, exist_ok=True)

    # ============================================
    # LOGGING CONFIGURATION
    # ============================================
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
    LOG_CONSOLE_LEVEL = os.getenv('LOG_CONSOLE_LEVEL', 'WARNING')
    LOG_FILE_PATH = Path(os.getenv('LOG_FILE_PATH', './logs/'))
    LOG_MAX_BYTES = int(os.getenv('LOG_MAX_BYTES', 10485760))  # 10MB
    LOG_BACKUP_COUNT = int(os.getenv('LOG_BACKUP_COUNT', 5))

    @classmethod
    def ensure_log_directory(cls):
        """Create log directory if it doesn't exist."""
        cls.LOG_FILE_PATH.mkdir(parents=True, exist_ok=True)

    # ============================================
    # VALIDATION
    # ============================================
    @classmethod
    def validate(cls):
        """
        Validate that all configuration values are usable.
        Raises ValueError listing every problem found.
        """
        errors = []

        if cls.VARIANT_CAP < 0:
            errors.append("SCP_VARIANT_CAP must be non-negative")

        if cls.COMPLETION_CAP < 0:
            errors.append("SCP_COMPLETION_CAP must be non-negative")

        if cls.SWEEP_CAP < 0:
            errors.append("SCP_SWEEP_CAP must be non-negative")

        if cls.DEFAULT_SEED < 0:
            errors.append("SCP_DEFAULT_SEED must be non-negative")

        if cls.MAX_ROUNDS_CEILING < 1:
            errors.append("SCP_MAX_ROUNDS_CEILING must be at least 1")

        if not 0.0 < cls.SIGNIFICANCE < 1.0:
            errors.append("SCP_SIGNIFICANCE must be between 0 and 1 (exclusive)")

        if errors:
            raise ValueError(
                "Configuration validation failed:\n" + "\n".join(f"  - {e}" for e in errors)
            )

    @classmethod
    def display_config(cls, stream=None):
        """Display current configuration."""
        lines = [
            "=" * 60,
            "SCP TOOLKIT - CONFIGURATION",
            "=" * 60,
            f"Variant cap:       {cls.VARIANT_CAP} uncertain elements per set",
            f"Completion cap:    {cls.COMPLETION_CAP} uncertain cells",
            f"Sweep cap:         {cls.SWEEP_CAP} grid cells",
            f"Default seed:      {cls.DEFAULT_SEED}",
            f"Max rounds ceiling: {cls.MAX_ROUNDS_CEILING}",
            f"Significance:      {cls.SIGNIFICANCE}",
            f"Show progress:     {cls.SHOW_PROGRESS}",
            f"Log Level:         {cls.LOG_LEVEL} (console {cls.LOG_CONSOLE_LEVEL})",
            f"Logs:              {cls.LOG_FILE_PATH}",
            f"Exports:           {cls.EXPORT_PATH}",
            "=" * 60,
        ]
        print("\n".join(lines), file=stream)


# Initialize log directory on module import
Config.ensure_log_directory()
