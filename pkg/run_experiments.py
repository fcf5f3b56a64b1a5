#!/usr/bin/env python3
"""
Standalone script to run the corpus experiments.

This script sweeps seeded corpora and checks:
1. Exact values on the four-vertex path (profile, robustness, game)
2. The 1/ln 4 guarantee of randomized rounding on good families
3. The tightness family and the squared-weight certificates
4. Structural predicates, priority approximation and the merge machinery

Usage:
    python run_experiments.py [--only NAME ...] [--seed N] [--output PATH]

Options:
    --only      Run only the named experiments
    --seed      Corpus seed (default from settings)
    --output    Where to write the JSON summary
"""

import argparse
import sys

from src.cli.experiments import EXPERIMENTS, run_experiments
from src.utils.logger import get_logger, setup_logger

# Initialize logger
setup_logger()
logger = get_logger()


def main():
    """Main entry point."""
    parser = argparse.ArgumentParser(
        description="Run the robust-matching corpus experiments",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=f"""
Examples:
  # Run every experiment with the default seed
  python run_experiments.py

  # Only the tightness family and the certificates
  python run_experiments.py --only tightness squared_certificates

  # Different corpus, summary written elsewhere
  python run_experiments.py --seed 7 --output results/seed7.json

Experiments:
  {", ".join(EXPERIMENTS)}
        """,
    )
    parser.add_argument(
        "--only",
        nargs="+",
        choices=sorted(EXPERIMENTS),
        help="Run only these experiments",
    )
    parser.add_argument("--seed", type=int, default=None, help="Corpus seed")
    parser.add_argument(
        "--output",
        default="experiments.json",
        help="Path of the JSON summary (default: experiments.json)",
    )
    args = parser.parse_args()

    try:
        stats = run_experiments(args.only, seed=args.seed)
        stats.save(args.output)

        print("\n" + "=" * 70)
        print("EXPERIMENT SUMMARY")
        print("=" * 70)
        for result in stats.results:
            mark = "✓" if result.passed else "✗"
            worst = "n/a" if result.worst is None else f"{result.worst:.9f}"
            print(
                f"{mark} {result.name:<22} instances={result.instances:<5} "
                f"worst={worst:<12} {result.duration_seconds:.2f}s"
            )
        print(f"Duration: {stats.duration_seconds:.2f} seconds")
        print(f"Summary written to {args.output}")
        print("=" * 70)
        return 0 if stats.success else 1

    except KeyboardInterrupt:
        logger.info("\nExperiments cancelled by user (Ctrl+C)")
        return 130

    except Exception as e:
        logger.exception(f"Fatal error during experiments: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
