"""Grundy-type invariants over (connected) orderings and the good/bad/ugly verdict."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Literal

from . import _search
from .errors import InvalidInputError
from .exact import Meter, SearchBudget, as_meter, chromatic_number
from .graph import (
    Graph,
    bfs_order,
    biconnected_components,
    induced_subgraph,
    is_clique_mask,
    is_connected,
    mask_of,
    _is_cycle_block,
)
from .greedy import greedy_colouring

Verdict = Literal["good", "bad", "ugly"]
Budget = SearchBudget | Meter | None


@dataclass(frozen=True)
class ClassificationReport:
    chi: int
    chi_c: int
    gamma_c: int
    verdict: Verdict
    gamma: int | None = None
    witness_good_ordering: list[int] | None = None
    witness_bad_ordering: list[int] | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def _require_connected(g: Graph, what: str) -> None:
    if g.n == 0:
        raise InvalidInputError(f"{what} needs at least one vertex")
    if not is_connected(g):
        raise InvalidInputError(f"{what} is only defined for connected graphs")


def _maximise(
    g: Graph, meter: Meter, connected: bool, seed_order: list[int], floor: int = 0
) -> tuple[int, list[int]]:
    """Raise the target colour until no (connected) run reaches it.

    ``floor`` is a known lower bound used to skip easy targets.
    """
    witness = seed_order
    best = greedy_colouring(g, seed_order).max_colour
    ceiling = min(g.n, g.max_degree() + 1)
    target = max(best + 1, min(floor, ceiling))
    while target <= ceiling:
        found = _search.reach_run(g, target, meter, connected)
        if found is None:
            if target > best + 1:
                target = best + 1
                continue
            break
        witness = found
        best = greedy_colouring(g, found).max_colour
        target = best + 1
    return best, witness


def grundy_number(g: Graph, budget: Budget = None) -> int:
    """Largest number of colours First-Fit uses over all orderings."""
    return grundy_with_witness(g, budget)[0]


def grundy_with_witness(g: Graph, budget: Budget = None, floor: int = 0) -> tuple[int, list[int]]:
    if g.n == 0:
        return 0, []
    return _maximise(g, as_meter(budget), False, list(range(g.n)), floor)


def connected_grundy_number(g: Graph, budget: Budget = None) -> tuple[int, list[int]]:
    """Γ_c with a connected ordering attaining it."""
    _require_connected(g, "connected_grundy_number")
    start = bfs_order(g, 0)
    return _maximise(g, as_meter(budget), True, start)


def connected_chromatic_number(
    g: Graph, budget: Budget = None, chi: int | None = None
) -> tuple[int, list[int] | None]:
    """χ_c, with a connected ordering using χ colours when one exists.

    When no connected ordering achieves χ the answer is χ + 1 (the known
    upper bound for connected greedy colourings) and the witness is None.
    """
    _require_connected(g, "connected_chromatic_number")
    meter = as_meter(budget)
    if chi is None:
        chi = chromatic_number(g, meter)[0]
    found = _search.low_run(g, chi, meter)
    if found is not None:
        return chi, found
    return chi + 1, None


def connected_ordering_within(g: Graph, k: int, budget: Budget = None) -> list[int] | None:
    """A connected ordering whose greedy run uses at most ``k`` colours, or None."""
    _require_connected(g, "connected_ordering_within")
    return _search.low_run(g, k, as_meter(budget))


def classify(g: Graph, budget: Budget = None, compute_gamma: bool = False) -> ClassificationReport:
    _require_connected(g, "classify")
    meter = as_meter(budget)
    chi = chromatic_number(g, meter)[0]
    chi_c, good = connected_chromatic_number(g, meter, chi=chi)
    gamma_c, worst = _maximise(g, meter, True, bfs_order(g, 0))
    if chi_c > chi:
        verdict: Verdict = "ugly"
    elif gamma_c == chi:
        verdict = "good"
    else:
        verdict = "bad"
    gamma = grundy_with_witness(g, meter, floor=gamma_c)[0] if compute_gamma else None
    return ClassificationReport(
        chi=chi,
        chi_c=chi_c,
        gamma_c=gamma_c,
        verdict=verdict,
        gamma=gamma,
        witness_good_ordering=good,
        witness_bad_ordering=worst if gamma_c > chi else None,
    )


def great_violation(g: Graph, budget: Budget = None, chi: int | None = None) -> tuple[list[int], int] | None:
    """A (connected ordering, seed) pair pushing some later vertex above χ, or None.

    Seeds above χ + 1 need no separate run: while every later vertex is
    still within 1..χ its First-Fit choice ignores any colour above χ on the
    first vertex, so all such seeds behave like χ + 1.
    """
    _require_connected(g, "is_great")
    meter = as_meter(budget)
    if chi is None:
        chi = chromatic_number(g, meter)[0]
    for first in range(g.n):
        for seed in range(1, min(chi + 1, g.n + 1) + 1):
            found = _search.reach_run(g, chi + 1, meter, True, first=first, seed=seed)
            if found is not None:
                return found, seed
    return None


def is_great(g: Graph, budget: Budget = None) -> bool:
    return great_violation(g, budget) is None


def great_by_biconnected(g: Graph, budget: Budget = None) -> Literal["great", "unknown"]:
    """Sufficient test: every block is a clique, a cycle, or itself great."""
    _require_connected(g, "great_by_biconnected")
    meter = as_meter(budget)
    for block in biconnected_components(g):
        bm = mask_of(block)
        if is_clique_mask(g, bm) or _is_cycle_block(g, block):
            continue
        sub, _ = induced_subgraph(g, block)
        if not is_great(sub, meter):
            return "unknown"
    return "great"
