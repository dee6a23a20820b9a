"""Connected greedy colourings of graphs.

Exact computation of the chromatic number, the connected greedy chromatic
number and the (connected) Grundy number on small graphs, the good / bad /
ugly classification built on them, and constructive good connected
orderings for K4-minor-free, comparability and perfect graphs.
"""

from .classify import (
    ClassificationReport,
    classify,
    connected_chromatic_number,
    connected_grundy_number,
    grundy_number,
    is_great,
)
from .errors import BudgetExhausted, CongreedyError, GraphParseError, InvalidInputError, NotPerfectError
from .exact import SearchBudget, chromatic_number, clique_number
from .graph import Graph, parse_graph
from .greedy import Colouring, greedy_colouring, is_connected_ordering, seeded_greedy

__version__ = "0.1.0"

__all__ = [
    "BudgetExhausted",
    "ClassificationReport",
    "Colouring",
    "CongreedyError",
    "Graph",
    "GraphParseError",
    "InvalidInputError",
    "NotPerfectError",
    "SearchBudget",
    "chromatic_number",
    "classify",
    "clique_number",
    "connected_chromatic_number",
    "connected_grundy_number",
    "greedy_colouring",
    "grundy_number",
    "is_connected_ordering",
    "is_great",
    "parse_graph",
    "seeded_greedy",
]
