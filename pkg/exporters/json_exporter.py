"""
JSON Exporter for the SCP Toolkit.
Renders toolkit documents as JSON and reads assignment (target) files.
"""

import json
from enum import Enum
from pathlib import Path
from typing import Any, Optional, Sequence, Union

import numpy as np

from config import Config
from sampler.assignment import Assignment
from utils import get_logger

logger = get_logger(__name__)


class JSONExporter:
    """
    Exports toolkit documents to JSON.

    Features:
    - Renders any to_dict() document to a JSON string (CLI standard output)
    - Writes documents to files under the export directory
    - Handles numpy scalars/arrays, tuples and enums automatically
    - Loads assignment documents used as sampling targets
    """

    def __init__(self, output_dir: Optional[Union[str, Path]] = None):
        """
        Initialize JSON exporter.

        Args:
            output_dir: Directory for exported files (default: Config.EXPORT_PATH)
        """
        self.output_dir = Path(output_dir) if output_dir is not None else Config.EXPORT_PATH

    def _serialize(self, obj: Any) -> Any:
        """
        Convert numpy/enum/tuple objects to JSON-serializable types.

        Args:
            obj: Object to serialize

        Returns:
            Serialized object
        """
        if hasattr(obj, 'to_dict'):
            return self._serialize(obj.to_dict())
        elif isinstance(obj, Enum):
            return obj.value
        elif isinstance(obj, np.ndarray):
            return obj.tolist()
        elif isinstance(obj, np.generic):
            return obj.item()
        elif isinstance(obj, dict):
            return {str(k): self._serialize(v) for k, v in obj.items()}
        elif isinstance(obj, (list, tuple)):
            return [self._serialize(item) for item in obj]
        else:
            return obj

    def render(self, document: Any) -> str:
        """Render a document as pretty-printed JSON text."""
        return json.dumps(self._serialize(document), indent=2, ensure_ascii=False)

    def export(self, document: Any, filename: str) -> str:
        """
        Write a document to a JSON file in the export directory.

        Args:
            document: Dict or object with to_dict()
            filename: Output filename

        Returns:
            Path to exported file
        """
        self.output_dir.mkdir(parents=True, exist_ok=True)
        output_path = self.output_dir / filename

        try:
            with open(output_path, 'w', encoding='utf-8') as f:
                f.write(self.render(document))
                f.write('\n')

            logger.info(f"Exported {filename} to {output_path}")
            return str(output_path)

        except Exception as e:
            logger.error(f"Failed to export {filename} to JSON: {e}", exc_info=True)
            raise

    def load_assignment(self, path: Union[str, Path],
                        elements: Optional[Sequence[str]] = None,
                        sets: Optional[Sequence[str]] = None) -> Assignment:
        """
        Read an assignment document.

        Accepts the full form ({"elements", "sets", "bits"}) or a bare array
        of per-element bit rows, as listed under "completions" by
        enumerate. A bare array needs the grid labels of the instance.

        Raises:
            OSError: If the file cannot be read
            ValueError: If the file is not a well-formed assignment document
        """
        with open(path, 'r', encoding='utf-8') as f:
            try:
                document = json.load(f)
            except json.JSONDecodeError as e:
                raise ValueError(f"{path} is not valid JSON: {e}") from None

        if isinstance(document, list):
            if elements is None or sets is None:
                raise ValueError(f"{path} holds bare bit rows; the instance grid is needed to read them")
            document = {'elements': list(elements), 'sets': list(sets), 'bits': document}
        elif not isinstance(document, dict):
            raise ValueError(f"{path} does not contain an assignment object")

        assignment = Assignment.from_dict(document)
        logger.info(f"Loaded assignment from {path}")
        return assignment
