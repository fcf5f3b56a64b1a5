"""Exact optimisation engines and brute-force oracles.

Components:
- OptProfile: OPT_0..OPT_r with witnesses
- branch_and_bound / enumerated_profile: enumeration path
- successive_matchings / bipartite_profile: polynomial bipartite path
- max_weight_at_most_k / opt_profile: path selection
- LexKey / lex_max / greedy: lexicographic optimisation
"""

from src.solvers.profile import OptProfile
from src.solvers.branch_and_bound import branch_and_bound, enumerated_profile
from src.solvers.bipartite import bipartite_profile, max_weight_matching, successive_matchings
from src.solvers.optimum import SolveMethod, max_weight_at_most_k, opt_profile, use_bipartite_path
from src.solvers.lexicographic import LexKey, greedy, lex_max, lex_max_sets, surrogate_weights

__all__ = [
    "OptProfile",
    "branch_and_bound",
    "enumerated_profile",
    "bipartite_profile",
    "max_weight_matching",
    "successive_matchings",
    "SolveMethod",
    "max_weight_at_most_k",
    "opt_profile",
    "use_bipartite_path",
    "LexKey",
    "greedy",
    "lex_max",
    "lex_max_sets",
    "surrogate_weights",
]
