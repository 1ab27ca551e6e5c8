"""holelab: exact desk-scale structural graph theory.

Holes (induced cycles of length >= 4) and their residues, peripheral
structure, multicovers and their refinements, showers and jets, explicit
gadget constructions, and independence-complex invariants — all computed
exactly, with node budgets instead of silent approximation.
"""

from .graph import Graph, graph_from_edges
from .errors import (
    HolelabError,
    InputError,
    BudgetExceededError,
    RefinementError,
    ChordError,
)
from .budget import Budget, DEFAULT_NODE_BUDGET

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "graph_from_edges",
    "HolelabError",
    "InputError",
    "BudgetExceededError",
    "RefinementError",
    "ChordError",
    "Budget",
    "DEFAULT_NODE_BUDGET",
    "__version__",
]
