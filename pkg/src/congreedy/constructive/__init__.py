"""Polynomial constructions of good connected orderings for K4-minor-free,
comparability and perfect graphs."""

from .comparability import (
    Orientation,
    comparability_good_ordering,
    height_colouring,
    height_function,
    swapped_height_colouring,
    transitive_orientation,
)
from .k4mf import k4mf_good_ordering, removable_low_degree_vertex
from .perfect import PerfectRun, perfect_good_ordering, perfect_run, reachable_set, reaching_colouring

__all__ = [
    "Orientation",
    "PerfectRun",
    "comparability_good_ordering",
    "height_colouring",
    "height_function",
    "k4mf_good_ordering",
    "perfect_good_ordering",
    "perfect_run",
    "reachable_set",
    "reaching_colouring",
    "removable_low_degree_vertex",
    "swapped_height_colouring",
    "transitive_orientation",
]
