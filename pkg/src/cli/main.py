#!/usr/bin/env python3
"""
Command-line entry point for robust matchings and independent sets.

Every command reads one instance (``--instance`` file or ``--gen`` spec),
writes a single JSON report to standard output, and logs to standard error.

Exit status:
    0   success
    1   a guaranteed property was found violated
    2   invalid input (or an instance too large for the requested command)
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from src.certify.certificate import certify_all
from src.cli.generators import generate
from src.cli.instance_io import Instance, dump_instance, encode_weight, load_instance
from src.game.matrix_game import build_matrix, deterministic_best, solve_game, verify_solution
from src.merge.params import MergeParams
from src.merge.random_merge import asymptotic_merge
from src.robust.evaluation import randomized_robustness, robustness
from src.robust.priority import (
    PriorityDistribution,
    priority_best_in_support,
    priority_optimum,
    priority_value,
)
from src.robust.rounding import randomized_robust
from src.robust.squared import squared_weight_solution
from src.solvers.lexicographic import lex_max
from src.solvers.optimum import max_weight_at_most_k, opt_profile
from src.systems.families import BMatchingSystem, MatchingSystem, MatroidIntersection
from src.theory.bit_functions import BitFunction
from src.theory.checkers import (
    check_2_extendible,
    check_bit_concave,
    check_bit_concave_for,
    check_good,
    check_good_sampled,
    check_theorem32,
)
from src.utils.config import get_settings
from src.utils.errors import GuaranteeViolation, InputError, ResourceLimitError
from src.utils.logger import get_logger, setup_logger
from src.utils.numbers import Surd, exact_log2, is_exact

logger = get_logger()

COMMANDS = (
    "solve",
    "profile",
    "robust",
    "randomized",
    "game",
    "certify",
    "check",
    "priority",
    "merge",
    "gen",
)

# Families known to be good; a failed structural check on them contradicts the theory
GOOD_FAMILIES = (MatchingSystem, BMatchingSystem, MatroidIntersection)

Report = Dict[str, Any]


def _json_default(value: Any) -> Any:
    if isinstance(value, (Fraction, Surd)):
        return float(value)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if hasattr(value, "item"):
        return value.item()
    raise TypeError(f"Cannot serialise {type(value).__name__}")


def render(report: Report) -> str:
    """Serialise a report deterministically."""
    return json.dumps(report, sort_keys=True, indent=2, default=_json_default)


def _parse_set(text: str) -> frozenset:
    try:
        return frozenset(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise InputError(f"--set expects comma-separated element ids, got '{text}'")


def parse_mu(text: str) -> PriorityDistribution:
    """``--mu`` as ``k:p,k:p`` or a JSON file holding ``{"k": p}`` or ``[{"k": k, "p": p}]``.

    Probabilities given as decimals are read exactly.
    """
    path = Path(text)
    if path.suffix == ".json" or path.exists():
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise InputError(f"Cannot read priority distribution from {path}: {e}")
        if isinstance(data, dict) and "mu" in data:
            data = data["mu"]
        if isinstance(data, dict):
            pairs = [(int(k), Fraction(str(p))) for k, p in data.items()]
        elif isinstance(data, list):
            pairs = [(int(entry["k"]), Fraction(str(entry["p"]))) for entry in data]
        else:
            raise InputError(f"Unsupported priority distribution document in {path}")
        return PriorityDistribution(tuple(pairs))

    pairs = []
    for item in filter(None, (part.strip() for part in text.split(","))):
        k, sep, p = item.partition(":")
        if not sep:
            raise InputError(f"--mu entries must look like k:p, got '{item}'")
        try:
            pairs.append((int(k), Fraction(p.strip())))
        except ValueError:
            raise InputError(f"Invalid --mu entry '{item}'")
    return PriorityDistribution(tuple(pairs))


def _bit_function_of(weights) -> Optional[BitFunction]:
    """The weights as a bit-function, if every weight is a positive power of two."""
    exponents = []
    for w in weights:
        log = exact_log2(w) if w > 0 else None
        if log is None or log.denominator != 1:
            return None
        exponents.append(int(log))
    return BitFunction(tuple(exponents))


def _require_graph(instance: Instance, command: str) -> None:
    if instance.graph is None or not isinstance(instance.system, MatchingSystem):
        raise InputError(f"'{command}' needs a matching instance on a graph")


# Commands


def cmd_solve(instance: Instance, args: argparse.Namespace) -> Tuple[Report, int]:
    if args.k is None:
        raise InputError("'solve' needs --k")
    items, value = max_weight_at_most_k(instance.system, instance.weights, args.k)
    return {
        "k": args.k,
        "set": sorted(items),
        "value": float(value),
        "value_exact": encode_weight(value) if is_exact(value) else None,
    }, 0


def cmd_profile(instance: Instance, args: argparse.Namespace) -> Tuple[Report, int]:
    profile = opt_profile(instance.system, instance.weights)
    report = profile.to_dict()
    report["opt_exact"] = [encode_weight(v) if is_exact(v) else None for v in profile.values]
    report["concave"] = profile.is_concave(get_settings().tolerance)
    return report, 0


def cmd_robust(instance: Instance, args: argparse.Namespace) -> Tuple[Report, int]:
    if args.set is not None:
        items = _parse_set(args.set)
        source = "given"
    elif isinstance(instance.system, MatchingSystem):
        items = squared_weight_solution(instance.system, instance.weights)
        source = "squared_weight"
    else:
        items = lex_max(instance.system, instance.weights)
        source = "lex_max"
    report = robustness(instance.system, instance.weights, items, min_k=args.K).to_dict()
    report.update({"set": sorted(items), "source": source})
    return report, 0


def cmd_randomized(instance: Instance, args: argparse.Namespace) -> Tuple[Report, int]:
    solution = randomized_robust(instance.system, instance.weights, resolution=args.resolution)
    report = randomized_robustness(
        instance.system, instance.weights, solution, min_k=args.K
    ).to_dict()
    report["distribution"] = solution.to_dict()
    return report, 0


def cmd_game(instance: Instance, args: argparse.Namespace) -> Tuple[Report, int]:
    matrix = build_matrix(instance.system, instance.weights, maximal_only=not args.full_support)
    if args.K > 1:
        matrix = matrix.restrict(args.K)
    solution = solve_game(matrix, exact=True if args.exact else None, tolerance=args.tol)
    verification = verify_solution(matrix, solution, tolerance=args.tol)
    if not verification.ok:
        raise GuaranteeViolation("; ".join(verification.violations))
    best_set, best_value = deterministic_best(matrix)
    report = solution.to_dict()
    report.update(
        {
            "deterministic_best": float(best_value),
            "deterministic_best_set": sorted(best_set),
            "rows": len(matrix.rows),
            "cols": list(matrix.cols),
        }
    )
    return report, 0


def cmd_certify(instance: Instance, args: argparse.Namespace) -> Tuple[Report, int]:
    _require_graph(instance, "certify")
    records = certify_all(instance.graph, instance.weights)
    verified = all(r["feasible"] and r["bound_holds"] for r in records)
    return {"records": records, "verified": verified}, 0 if verified else 1


def cmd_check(instance: Instance, args: argparse.Namespace) -> Tuple[Report, int]:
    system, weights = instance.system, instance.weights
    samples = args.samples
    witnesses: Dict[str, Any] = {}
    own = _bit_function_of(weights)

    concave = check_bit_concave_for(system, own) if own is not None else None
    if concave is None or concave.holds:
        concave = check_bit_concave(system, samples=samples, seed=args.seed)
    good = check_good(system, own) if own is not None else None
    if good is None or good.holds:
        good = check_good_sampled(system, samples=samples, seed=args.seed)
    extendible = check_2_extendible(system)
    theorem = check_theorem32(
        system, samples=samples, seed=args.seed, extra=[own] if own is not None else None
    )

    for name, result in (("bit_concave", concave), ("good", good), ("two_extendible", extendible)):
        if result.witness is not None:
            witnesses[name] = result.witness

    contradiction = not theorem.agree
    if isinstance(system, GOOD_FAMILIES) and not (concave.holds and good.holds):
        contradiction = True
    # Good systems are 2-extendible
    if good.holds and not extendible.holds:
        contradiction = True

    report = {
        "bit_concave": concave.holds,
        "good": good.holds,
        "two_extendible": extendible.holds,
        "witnesses": witnesses,
        "theorem32": theorem.to_dict(),
        "contradiction": contradiction,
    }
    return report, 1 if contradiction else 0


def cmd_priority(instance: Instance, args: argparse.Namespace) -> Tuple[Report, int]:
    if args.mu is None:
        raise InputError("'priority' needs --mu")
    mu = parse_mu(args.mu)
    solution = randomized_robust(instance.system, instance.weights)
    chosen = priority_best_in_support(solution, instance.weights, mu)
    value = priority_value(chosen, instance.weights, mu)
    best_set, best_value = priority_optimum(instance.system, instance.weights, mu)
    return {
        "mu": mu.to_dict()["mu"],
        "set": sorted(chosen),
        "value": float(value),
        "optimum": float(best_value),
        "optimum_set": sorted(best_set),
        "ratio": float(value) / float(best_value) if best_value else 1.0,
    }, 0


def cmd_merge(instance: Instance, args: argparse.Namespace) -> Tuple[Report, int]:
    _require_graph(instance, "merge")
    solution = randomized_robust(instance.system, instance.weights)
    ranked = sorted(solution.support, key=lambda entry: (-entry[1], sorted(entry[0])))
    (first, p1) = ranked[0]
    (second, p2) = ranked[1] if len(ranked) > 1 else ranked[0]
    if args.mu is not None:
        try:
            mu = float(Fraction(args.mu))
        except ValueError:
            raise InputError(f"'merge' needs --mu as a number in [0, 1], got '{args.mu}'")
    else:
        mu = float(p1 / (p1 + p2)) if len(ranked) > 1 else 1.0

    params = MergeParams.create(args.delta, args.K)
    outcome = asymptotic_merge(
        first, second, instance.graph, mu, params, samples=args.samples, seed=args.seed
    )
    report = outcome.to_dict()
    report.update(
        {"first": sorted(first), "second": sorted(second), "mu": mu, "params": params.to_dict()}
    )
    return report, 0


def cmd_gen(instance: Instance, args: argparse.Namespace) -> Tuple[Report, int]:
    return dump_instance(instance), 0


HANDLERS = {
    "solve": cmd_solve,
    "profile": cmd_profile,
    "robust": cmd_robust,
    "randomized": cmd_randomized,
    "game": cmd_game,
    "certify": cmd_certify,
    "check": cmd_check,
    "priority": cmd_priority,
    "merge": cmd_merge,
    "gen": cmd_gen,
}


def resolve_instance(args: argparse.Namespace) -> Instance:
    """Load or generate the instance named on the command line.

    Raises:
        InputError: If neither or both of --instance and --gen are given
    """
    if (args.instance is None) == (args.gen is None):
        raise InputError("Give exactly one of --instance or --gen")
    instance = load_instance(args.instance) if args.instance else generate(args.gen, args.seed)

    if args.system == "b_matching" and not isinstance(instance.system, BMatchingSystem):
        raise InputError("--system b_matching needs an instance with vertex capacities")
    if args.system == "matching" and isinstance(instance.system, BMatchingSystem):
        instance = Instance.from_graph(instance.graph, instance.name)
    return instance


def run(command: str, instance: Instance, args: argparse.Namespace) -> Tuple[Report, int]:
    """Execute one command and return its report and exit status.

    Raises:
        InputError: On unknown commands or invalid input
        GuaranteeViolation: When a hard-asserted property fails
    """
    handler = HANDLERS.get(command)
    if handler is None:
        raise InputError(f"Unknown command '{command}', expected one of {COMMANDS}")
    logger.info(f"Running '{command}' on {instance.name}: {instance.system.describe()}")
    return handler(instance, args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="robust-matching",
        description="Robust matchings and independent sets: solve, evaluate, certify and check",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # OPT profile of the four-vertex path with exact weights
  robust-matching profile --gen fig1

  # Optimal randomized strategy, solved over exact arithmetic
  robust-matching game --gen fig1 --exact

  # Randomized rounding on the tightness family
  robust-matching randomized --gen remark23:n=8

  # Structural checks with a bundled witness
  robust-matching check --gen lemma28

  # Merge the two heaviest rounding outcomes
  robust-matching merge --gen random_bipartite:left=4,right=4 --delta 0.5 --K 1
        """,
    )
    parser.add_argument("command", choices=COMMANDS, help="Command to run")
    parser.add_argument("--instance", help="Path to an instance JSON document")
    parser.add_argument("--gen", help="Generator spec name:key=value,... (e.g. remark23:n=4)")
    parser.add_argument("--seed", type=int, default=None, help="Random seed")
    parser.add_argument("--k", type=int, default=None, help="Cardinality for 'solve'")
    parser.add_argument("--delta", type=float, default=0.5, help="Merge precision in (0, 1)")
    parser.add_argument("--K", type=int, default=1, help="Smallest cardinality that counts")
    parser.add_argument("--samples", type=int, default=None, help="Sample count")
    parser.add_argument(
        "--mu", default=None, help="Priority distribution k:p,... or JSON file; merge probability"
    )
    parser.add_argument("--exact", action="store_true", help="Force the exact LP path for 'game'")
    parser.add_argument("--tol", type=float, default=None, help="Numeric tolerance (default 1e-9)")
    parser.add_argument("--set", default=None, help="Comma-separated element ids for 'robust'")
    parser.add_argument(
        "--resolution", type=int, default=None, help="Log-weight grid for 'randomized'"
    )
    parser.add_argument(
        "--full-support", action="store_true", help="Game rows over all independent sets"
    )
    parser.add_argument(
        "--system", choices=("matching", "b_matching"), default=None, help="Graph system family"
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Log warnings and errors only")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    args = build_parser().parse_args(argv)
    setup_logger("DEBUG" if args.verbose else "WARNING" if args.quiet else None)
    settings = get_settings()
    if args.seed is None:
        args.seed = settings.default_seed
    if args.tol is None:
        args.tol = settings.tolerance

    with logger.contextualize(command=args.command):
        try:
            instance = resolve_instance(args)
            report, status = run(args.command, instance, args)
        except (InputError, ResourceLimitError) as e:
            logger.error(f"Input error: {e}")
            return 2
        except GuaranteeViolation as e:
            logger.error(f"Guarantee violated: {e}")
            return 1

    print(render(report))
    if status:
        logger.warning(f"'{args.command}' finished with status {status}")
    return status


if __name__ == "__main__":
    sys.exit(main())
