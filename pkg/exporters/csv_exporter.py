"""
CSV Exporter for the SCP Toolkit.
Exports matrices, variants, completions and frequencies to CSV via pandas.
"""

from pathlib import Path
from typing import Optional, Sequence, Union

import pandas as pd

from config import Config
from oracle.completions import CompletionSet
from quantum.quantum_matrix import QuantumMatrix
from sampler.sampling import SampleReport
from solver.ternary import TernaryMatrix, Variant
from utils import get_logger

logger = get_logger(__name__)


class CSVExporter:
    """
    Exports toolkit results to CSV format.

    Files:
    1. matrix.csv - ternary matrix (codes 1/0/-1), one row per element
    2. quantum_matrix.csv - cell states as ASCII kets
    3. variants_<set>.csv - one row per variant, 1/0 membership per element
    4. completions.csv - one row per completion, one bit column per cell
    5. frequencies.csv - member frequency per uncertain cell
    6. round_count_study.csv - rounds-to-target statistics per u
    """

    def __init__(self, output_dir: Optional[Union[str, Path]] = None):
        """
        Initialize CSV exporter.

        Args:
            output_dir: Directory for exported files (default: Config.EXPORT_PATH)
        """
        self.output_dir = Path(output_dir) if output_dir is not None else Config.EXPORT_PATH

    def _write(self, df: pd.DataFrame, filename: str, **kwargs) -> str:
        self.output_dir.mkdir(parents=True, exist_ok=True)
        output_path = self.output_dir / filename
        try:
            df.to_csv(output_path, encoding='utf-8', **kwargs)
            logger.info(f"Exported {len(df)} rows to {output_path}")
            return str(output_path)
        except Exception as e:
            logger.error(f"Failed to export {filename} to CSV: {e}", exc_info=True)
            raise

    def export_matrix(self, matrix: TernaryMatrix, filename: str = 'matrix.csv') -> str:
        """Export the ternary matrix."""
        return self._write(matrix.to_frame(), filename, index_label='element')

    def export_quantum_matrix(self, qmatrix: QuantumMatrix, filename: str = 'quantum_matrix.csv') -> str:
        """Export the lifted matrix as ket labels."""
        return self._write(qmatrix.to_frame(), filename, index_label='element')

    def export_variants(self, variants: Sequence[Variant], elements: Sequence[str],
                        filename: Optional[str] = None) -> str:
        """Export variants of one set: name, index, then 1/0 per element."""
        set_name = variants[0].set if variants else 'set'
        rows = []
        for variant in variants:
            members = set(variant.members)
            row = {'variant': variant.name, 'index': variant.index}
            row.update({element: int(element in members) for element in elements})
            rows.append(row)
        df = pd.DataFrame(rows, columns=['variant', 'index'] + list(elements))
        return self._write(df, filename or f"variants_{set_name}.csv", index=False)

    def export_completions(self, completions: CompletionSet, filename: str = 'completions.csv') -> str:
        """Export completions: one bit column per cell, row-major (0 member, 1 non-member)."""
        return self._write(completions.to_frame(), filename, index_label='completion')

    def export_frequencies(self, report: SampleReport, filename: str = 'frequencies.csv') -> str:
        """Export per-cell member frequencies of a sampling run."""
        df = pd.DataFrame(
            [(e, s, f) for (e, s), f in report.per_cell_frequency.items()],
            columns=['element', 'set', 'member_frequency'],
        )
        df['rounds'] = report.rounds
        return self._write(df, filename, index=False)

    def export_study(self, frame: pd.DataFrame, filename: str = 'round_count_study.csv') -> str:
        """Export round-count study rows (indexed by u)."""
        return self._write(frame, filename, index_label='u')
