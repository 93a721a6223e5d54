"""
SCP Toolkit - Set Constraint Problem solver and sampler
Command-line entry point running the full pipeline on constraint documents.
"""

import argparse
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from analysis_engine import RoundCountAnalyzer
from config import Config
from core import (
    CapExceededError,
    ContradictionError,
    DimensionMismatchError,
    InvalidInstanceError,
    ParseError,
    SCPError,
    UnknownSetError,
    UnreachableTargetError,
    load_scp
)
from exporters import CSVExporter, JSONExporter
from oracle import enumerate_completions
from quantum import lift, render_family, render_universe, set_expression
from sampler import prepare, sample_frequencies, sample_until
from solver import build_matrix, describe_set, enumerate_variants
from utils import format_percentage, get_logger
from validators import validate

logger = get_logger('cli')

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_CONTRADICTION = 3
EXIT_CAP = 4

DEFAULT_ROUNDS = 10000
BANNER = '=' * 70

Document = Dict[str, Any]


class SCPArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with EXIT_USAGE."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _positive_int(text: str) -> int:
    value = _non_negative_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer, got 0")
    return value


def _seed(text: str) -> int:
    """N or 'random' (fresh OS entropy)."""
    if text.lower() == 'random':
        return int(np.random.SeedSequence().entropy)
    return _non_negative_int(text)


def _banner(title: str) -> List[str]:
    return [BANNER, title, BANNER]


class SCPToolkit:
    """
    Command handlers for the SCP Toolkit.

    Features:
    - Ternary matrix and per-set partitions (solve)
    - Lifted cell states and set expressions (quantum)
    - Seeded measurement rounds, with or without a target (sample)
    - Per-set variants or joint completions (enumerate)
    - Rounds-to-target study over synthetic instances (study)
    - Optional CSV/JSON export of every result
    """

    def __init__(self, export: Optional[str] = None, progress: bool = False):
        """
        Initialize toolkit application.

        Args:
            export: 'csv', 'json' or None
            progress: Show tqdm progress bars on long runs
        """
        self.export = export
        self.progress = progress
        self.json_exporter = JSONExporter()
        self.csv_exporter = CSVExporter()
        self.exported: List[str] = []

    # ============================================
    # solve
    # ============================================
    def cmd_solve(self, args) -> Tuple[Document, str]:
        """Ternary matrix plus the three-way partition of every set."""
        instance = load_scp(args.file)
        matrix = build_matrix(instance)
        descriptions = [describe_set(matrix, s) for s in matrix.sets]
        report = validate(instance)

        document = {
            'matrix': matrix.to_dict(),
            'descriptions': [d.to_dict() for d in descriptions],
            'warnings': report.warnings,
        }

        lines = _banner(f"SCP MATRIX - {args.file}")
        lines.append(f"Elements: {len(matrix.elements)}  Sets: {len(matrix.sets)}  "
                     f"Constraints: {len(instance.constraints)}  "
                     f"Uncertain cells: {matrix.uncertain_count}")
        lines.append("")
        lines.append(matrix.to_frame().to_string())
        lines.append("")
        lines.append("Set descriptions:")
        lines.extend(f"  {d}" for d in descriptions)
        if report.warnings:
            lines.append("")
            lines.append("Warnings:")
            lines.extend(f"  {w}" for w in report.warnings)
        lines.append(BANNER)

        if self.export == 'csv':
            self.exported.append(self.csv_exporter.export_matrix(matrix, f"{Path(args.file).stem}_matrix.csv"))
        elif self.export == 'json':
            self.exported.append(self.json_exporter.export(document, f"{Path(args.file).stem}_matrix.json"))

        return document, "\n".join(lines)

    # ============================================
    # quantum
    # ============================================
    def cmd_quantum(self, args) -> Tuple[Document, str]:
        """Lifted cell states and one expression per set."""
        instance = load_scp(args.file)
        qmatrix = lift(build_matrix(instance))
        expressions = [set_expression(qmatrix, s) for s in qmatrix.sets]

        document = {
            'matrix': qmatrix.to_dict(),
            'universe': render_universe(qmatrix.elements),
            'family': render_family(qmatrix.sets),
            'expressions': [e.to_dict() for e in expressions],
        }

        lines = _banner(f"QUANTUM MATRIX - {args.file}")
        lines.append(document['universe'])
        lines.append(document['family'])
        lines.append("")
        lines.append(qmatrix.to_frame().to_string())
        lines.append("")
        lines.extend(e['expression'] for e in document['expressions'])
        lines.append(BANNER)

        if self.export == 'csv':
            self.exported.append(self.csv_exporter.export_quantum_matrix(
                qmatrix, f"{Path(args.file).stem}_quantum_matrix.csv"))
        elif self.export == 'json':
            self.exported.append(self.json_exporter.export(document, f"{Path(args.file).stem}_quantum.json"))

        return document, "\n".join(lines)

    # ============================================
    # sample
    # ============================================
    def cmd_sample(self, args) -> Tuple[Document, str]:
        """Measurement rounds until a target is hit, or a fixed number of frequency rounds."""
        instance = load_scp(args.file)
        register = prepare(lift(build_matrix(instance)))

        target = None
        if args.target is not None and args.target.lower() != 'none':
            target = self.json_exporter.load_assignment(args.target, register.elements, register.sets)

        if target is not None:
            report = sample_until(register, target, args.seed, args.max_rounds, progress=self.progress)
        else:
            if args.max_rounds is not None:
                logger.warning("--max-rounds only applies with --target; running --rounds frequency rounds")
            report = sample_frequencies(register, args.seed, args.rounds, progress=self.progress)

        document = report.to_dict()
        document['target'] = target.to_dict() if target is not None else None
        document['uncertain_cells'] = register.uncertain_count

        lines = _banner(f"SAMPLING REPORT - {args.file}")
        lines.append(f"Seed:            {report.seed}")
        lines.append(f"Rounds:          {report.rounds}")
        if target is None:
            lines.append("Target:          none (frequency mode)")
        elif report.hit:
            lines.append(f"Target:          hit at round {report.rounds}")
        else:
            lines.append(f"Target:          not hit within {report.rounds} rounds")
        lines.append(f"Preparations:    {report.preparation_count}")
        lines.append(f"Measurements:    {report.measurement_count}")
        if report.per_cell_frequency:
            frame = pd.DataFrame(
                [(e, s, format_percentage(f)) for (e, s), f in report.per_cell_frequency.items()],
                columns=['element', 'set', 'member'],
            )
            lines.append("")
            lines.append("Member frequency per uncertain cell:")
            lines.append(frame.to_string(index=False))
        lines.append(BANNER)

        if self.export == 'csv':
            self.exported.append(self.csv_exporter.export_frequencies(
                report, f"{Path(args.file).stem}_frequencies.csv"))
        elif self.export == 'json':
            self.exported.append(self.json_exporter.export(document, f"{Path(args.file).stem}_sample.json"))

        return document, "\n".join(lines)

    # ============================================
    # enumerate
    # ============================================
    def cmd_enumerate(self, args) -> Tuple[Document, str]:
        """Variants of one set, or every joint completion with --set all."""
        instance = load_scp(args.file)
        matrix = build_matrix(instance)
        stem = Path(args.file).stem

        if args.set == 'all':
            completions = enumerate_completions(matrix, args.cap)
            document = completions.to_dict()

            lines = _banner(f"JOINT COMPLETIONS - {args.file}")
            lines.append(f"{len(completions)} completions over {len(completions.uncertain)} uncertain cells "
                         f"(0 = member, 1 = non-member)")
            lines.append("")
            lines.append(completions.to_frame().to_string())
            lines.append(BANNER)

            if self.export == 'csv':
                self.exported.append(self.csv_exporter.export_completions(completions, f"{stem}_completions.csv"))
            elif self.export == 'json':
                self.exported.append(self.json_exporter.export(document, f"{stem}_completions.json"))
        else:
            description = describe_set(matrix, args.set)
            variants = enumerate_variants(matrix, args.set, args.cap)
            document = {
                'set': args.set,
                'description': description.to_dict(),
                'variants': [v.to_dict() for v in variants],
            }

            lines = _banner(f"VARIANTS OF {args.set} - {args.file}")
            lines.append(str(description))
            lines.append("")
            lines.extend(str(v) for v in variants)
            lines.append(BANNER)

            if self.export == 'csv':
                self.exported.append(self.csv_exporter.export_variants(
                    variants, matrix.elements, f"{stem}_variants_{args.set}.csv"))
            elif self.export == 'json':
                self.exported.append(self.json_exporter.export(document, f"{stem}_variants_{args.set}.json"))

        return document, "\n".join(lines)

    # ============================================
    # study
    # ============================================
    def cmd_study(self, args) -> Tuple[Document, str]:
        """Mean rounds-to-target against 2^u for a range of u."""
        analyzer = RoundCountAnalyzer(trials=args.trials, seed=args.seed, progress=self.progress)
        analysis = analyzer.run_analysis(range(args.min_u, args.max_u + 1))
        frame = RoundCountAnalyzer.to_frame(analysis)

        lines = _banner("ROUND-COUNT STUDY")
        lines.append(f"Trials per u: {analysis['trials']}  Seed: {analysis['seed']}  "
                     f"Tolerance: {format_percentage(analysis['tolerance'], 0)}")
        lines.append("")
        lines.append(frame[['expected_rounds', 'mean_rounds', 'median_rounds', 'std_rounds',
                            'relative_error', 'within_tolerance', 'hit_rate', 'register_size']].to_string())
        lines.append(BANNER)

        if self.export == 'csv':
            self.exported.append(self.csv_exporter.export_study(frame))
        elif self.export == 'json':
            self.exported.append(self.json_exporter.export(analysis, 'round_count_study.json'))

        return analysis, "\n".join(lines)


def build_parser() -> SCPArgumentParser:
    """Argument parser with one subcommand per pipeline stage."""
    common = SCPArgumentParser(add_help=False)
    common.add_argument('--format', choices=['text', 'json'], default='text',
                        help='Output format on standard output (default: text)')
    common.add_argument('--export', choices=['csv', 'json'],
                        help='Also write the result under EXPORT_PATH')
    common.add_argument('--show-config', action='store_true',
                        help='Print the effective configuration to standard error')
    common.add_argument('--progress', action='store_true',
                        help='Show progress bars (also SCP_SHOW_PROGRESS=true)')

    parser = SCPArgumentParser(
        prog='scp',
        description='SCP Toolkit - ternary-matrix solver and measurement sampler for set constraints',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Ternary matrix and set partitions
  python scp_toolkit.py solve data/worked_example.scp

  # Set expressions as JSON
  python scp_toolkit.py quantum data/worked_example.scp --format json

  # 10,000 frequency rounds, or search for a target assignment
  python scp_toolkit.py sample data/worked_example.scp --seed 42
  python scp_toolkit.py sample data/worked_example.scp --target data/worked_example_target.json

  # Variants of X, or all joint completions exported to CSV
  python scp_toolkit.py enumerate data/worked_example.scp --set X
  python scp_toolkit.py enumerate data/worked_example.scp --set all --export csv

  # Rounds-to-target study for u = 1..8
  python scp_toolkit.py study --trials 1000
        """
    )
    subparsers = parser.add_subparsers(dest='command', metavar='command', required=True)

    solve = subparsers.add_parser('solve', parents=[common], help='Build the ternary matrix')
    solve.add_argument('file', help='Constraint document')

    quantum = subparsers.add_parser('quantum', parents=[common], help='Lift to cell states and set expressions')
    quantum.add_argument('file', help='Constraint document')

    sample = subparsers.add_parser('sample', parents=[common], help='Run seeded measurement rounds')
    sample.add_argument('file', help='Constraint document')
    sample.add_argument('--seed', type=_seed, default=Config.DEFAULT_SEED,
                        help="Stream seed, N or 'random' (default: SCP_DEFAULT_SEED)")
    sample.add_argument('--rounds', type=_positive_int, default=DEFAULT_ROUNDS,
                        help=f'Frequency rounds without a target (default: {DEFAULT_ROUNDS})')
    sample.add_argument('--max-rounds', type=_positive_int,
                        help='Round budget for the target search (default: 2^(u+4), capped)')
    sample.add_argument('--target', metavar='FILE|none',
                        help='Assignment JSON to search for; none for frequency mode')

    enumerate_ = subparsers.add_parser('enumerate', parents=[common], help='List variants or completions')
    enumerate_.add_argument('file', help='Constraint document')
    enumerate_.add_argument('--set', default='all', metavar='NAME|all',
                            help='Set whose variants to list, or all for joint completions (default: all)')
    enumerate_.add_argument('--cap', type=_non_negative_int,
                            help='Maximum uncertain positions (default: SCP_VARIANT_CAP / SCP_COMPLETION_CAP)')

    study = subparsers.add_parser('study', parents=[common], help='Rounds-to-target study over synthetic instances')
    study.add_argument('--min-u', type=_non_negative_int, default=1, help='Smallest u (default: 1)')
    study.add_argument('--max-u', type=_non_negative_int, default=8, help='Largest u (default: 8)')
    study.add_argument('--trials', type=_positive_int, default=1000, help='Searches per u (default: 1000)')
    study.add_argument('--seed', type=_seed, default=Config.DEFAULT_SEED,
                       help="Base seed, N or 'random' (default: SCP_DEFAULT_SEED)")

    return parser


def _fail(code: int, message: str, command: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    logger.info(f"{command} failed with exit code {code}: {message}")
    return code


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point. Returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if args.command == 'study' and args.min_u > args.max_u:
        return _fail(EXIT_USAGE, f"--min-u ({args.min_u}) exceeds --max-u ({args.max_u})", args.command)

    if args.show_config:
        Config.display_config(sys.stderr)

    try:
        Config.validate()
    except ValueError as e:
        return _fail(EXIT_USAGE, str(e), args.command)

    app = SCPToolkit(export=args.export, progress=args.progress or Config.SHOW_PROGRESS)
    handler = getattr(app, f"cmd_{args.command}")
    logger.info(f"Running {args.command} ({' '.join(argv if argv is not None else sys.argv[1:])})")

    try:
        document, text = handler(args)
    except ContradictionError as e:
        return _fail(EXIT_CONTRADICTION, str(e), args.command)
    except CapExceededError as e:
        return _fail(EXIT_CAP, str(e), args.command)
    except UnknownSetError as e:
        return _fail(EXIT_USAGE, str(e), args.command)
    except (ParseError, InvalidInstanceError, UnreachableTargetError, DimensionMismatchError) as e:
        return _fail(EXIT_INVALID, str(e), args.command)
    except OSError as e:
        return _fail(EXIT_USAGE, f"cannot read input: {e}", args.command)
    except ValueError as e:
        # Malformed target documents and rejected sampling parameters
        return _fail(EXIT_INVALID, str(e), args.command)
    except SCPError as e:
        return _fail(EXIT_USAGE, str(e), args.command)
    except KeyboardInterrupt:
        print("\n\nInterrupted by user.", file=sys.stderr)
        logger.info("Interrupted by user")
        return EXIT_USAGE
    except Exception as e:
        print(f"\n\nFATAL ERROR: {e}", file=sys.stderr)
        logger.error("Fatal error", exc_info=True)
        return EXIT_USAGE

    if args.format == 'json':
        print(app.json_exporter.render(document))
    else:
        print(text)

    for path in app.exported:
        print(f"Exported to: {path}", file=sys.stderr)

    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
