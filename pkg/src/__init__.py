"""Robust matchings and independent sets under an unknown cardinality bound.

Library and CLI for computing robust deterministic and randomized solutions,
optimal mixed strategies of the robustness game, duality certificates, and
structural checks of the independence systems the guarantees require.
"""

__version__ = "0.1.0"
