"""Exact exponential-time oracles for small graphs.

Every solver either returns an exact answer or raises
:class:`~congreedy.errors.BudgetExhausted`; nothing here approximates.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExhausted, InvalidInputError
from .graph import Graph, complement, iter_bits
from .greedy import Colouring


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int | None = None
    max_millis: int | None = None

    def __post_init__(self) -> None:
        for name in ("max_nodes", "max_millis"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise InvalidInputError(f"{name} must be positive")

    def meter(self) -> Meter:
        return Meter(self)


UNLIMITED = SearchBudget()


class Meter:
    """Counts search nodes against a :class:`SearchBudget`."""

    __slots__ = ("nodes", "_max_nodes", "_deadline")

    def __init__(self, budget: SearchBudget):
        self.nodes = 0
        self._max_nodes = budget.max_nodes
        self._deadline = (
            time.monotonic() + budget.max_millis / 1000.0 if budget.max_millis is not None else None
        )

    def tick(self) -> None:
        self.nodes += 1
        if self._max_nodes is not None and self.nodes > self._max_nodes:
            raise BudgetExhausted(f"search exceeded {self._max_nodes} nodes")
        if self._deadline is not None and (self.nodes & 0x3FF) == 0 and time.monotonic() > self._deadline:
            raise BudgetExhausted("search exceeded its time budget")


def as_meter(budget: SearchBudget | Meter | None) -> Meter:
    if isinstance(budget, Meter):
        return budget
    return (budget or UNLIMITED).meter()


# ---------------------------------------------------------------------------
# cliques


def _colour_sort(adj: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    """Greedy-colour ``p``; return vertices by colour class with each vertex's class index."""
    order: list[int] = []
    bounds: list[int] = []
    uncoloured = p
    colour = 0
    while uncoloured:
        colour += 1
        q = uncoloured
        while q:
            v = (q & -q).bit_length() - 1
            q &= ~(1 << v) & ~adj[v]
            uncoloured &= ~(1 << v)
            order.append(v)
            bounds.append(colour)
    return order, bounds


def max_clique_in(adj: Sequence[int], candidates: int, meter: Meter, target: int | None = None) -> int:
    """Largest clique inside ``candidates`` as a bitmask.

    With ``target`` set, stop as soon as a clique of that size is found.
    """
    best = [0, 0]  # size, mask

    def expand(size: int, r: int, p: int) -> bool:
        meter.tick()
        order, bounds = _colour_sort(adj, p)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best[0]:
                return False
            v = order[i]
            r2 = r | 1 << v
            p2 = p & adj[v]
            if p2:
                if expand(size + 1, r2, p2):
                    return True
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, r2
                if target is not None and best[0] >= target:
                    return True
            p &= ~(1 << v)
        return False

    if candidates:
        expand(0, 0, candidates)
    return best[1]


def clique_number(g: Graph, budget: SearchBudget | Meter | None = None) -> int:
    return max_clique_in(g.adj, g.full_mask, as_meter(budget)).bit_count()


def maximum_clique(g: Graph, budget: SearchBudget | Meter | None = None) -> list[int]:
    return list(iter_bits(max_clique_in(g.adj, g.full_mask, as_meter(budget))))


def edge_in_k_clique(
    g: Graph, u: int, v: int, k: int, budget: SearchBudget | Meter | None = None
) -> bool:
    """Whether some k-clique contains the edge ``uv``."""
    if not g.has_edge(u, v):
        raise InvalidInputError(f"{u}{v} is not an edge")
    if k < 2:
        raise InvalidInputError("k must be at least 2")
    need = k - 2
    if need == 0:
        return True
    common = g.adj[u] & g.adj[v]
    if common.bit_count() < need:
        return False
    return max_clique_in(g.adj, common, as_meter(budget), target=need).bit_count() >= need


# ---------------------------------------------------------------------------
# colouring


def _dsatur_greedy(g: Graph) -> list[int]:
    """DSATUR heuristic colouring (an upper bound for the exact search)."""
    n = g.n
    colours = [0] * n
    seen = [0] * n  # bitmask of neighbour colours, bit c for colour c
    deg = [g.degree(v) for v in range(n)]
    for _ in range(n):
        v = max(
            (w for w in range(n) if not colours[w]),
            key=lambda w: (seen[w].bit_count(), deg[w], -w),
        )
        c = 1
        while seen[v] >> c & 1:
            c += 1
        colours[v] = c
        for w in iter_bits(g.adj[v]):
            seen[w] |= 1 << c
    return colours


def _k_colour(
    g: Graph, k: int, forbidden: dict[int, int], meter: Meter
) -> list[int] | None:
    """Backtracking DSATUR for a proper k-colouring avoiding ``forbidden``.

    ``forbidden`` maps a vertex to a bitmask of disallowed colours
    (bit ``c`` for colour ``c``).  Colours never mentioned in a constraint are
    interchangeable, so only the smallest unused one of them is branched on.
    """
    n = g.n
    if n == 0:
        return []
    if k <= 0:
        return None
    full = ((1 << (k + 1)) - 1) & ~1
    adj = g.adj
    nbrs = [list(iter_bits(adj[v])) for v in range(n)]
    deg = [len(x) for x in nbrs]
    mentioned = 0
    for m in forbidden.values():
        mentioned |= m
    free_colours = full & ~mentioned
    colours = [0] * n
    # count[v][c]: number of coloured neighbours of v holding colour c
    count = [[0] * (k + 1) for _ in range(n)]
    blocked = [forbidden.get(v, 0) & full for v in range(n)]
    for v in range(n):
        if blocked[v] == full:
            return None

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if colours[v]:
                continue
            kv = ((blocked[v]).bit_count(), deg[v], -v)
            if key is None or kv > key:
                best, key = v, kv
        return best

    def assign(v: int, c: int) -> bool:
        colours[v] = c
        ok = True
        for w in nbrs[v]:
            cw = count[w]
            cw[c] += 1
            if cw[c] == 1:
                blocked[w] |= 1 << c
                if not colours[w] and blocked[w] == full:
                    ok = False
        return ok

    def unassign(v: int, c: int) -> None:
        colours[v] = 0
        for w in nbrs[v]:
            cw = count[w]
            cw[c] -= 1
            if cw[c] == 0 and not forbidden.get(w, 0) >> c & 1:
                blocked[w] &= ~(1 << c)

    def solve(depth: int, used: int) -> bool:
        if depth == n:
            return True
        meter.tick()
        v = pick()
        avail = full & ~blocked[v]
        tried_fresh = False
        for c in iter_bits(avail):
            bit = 1 << c
            if bit & free_colours and not bit & used:
                if tried_fresh:
                    continue
                tried_fresh = True
            if assign(v, c) and solve(depth + 1, used | bit):
                return True
            unassign(v, c)
        return False

    return list(colours) if solve(0, 0) else None


def _constraint_masks(g: Graph, constraint: Iterable[tuple[int, int]]) -> dict[int, int]:
    forbidden: dict[int, int] = {}
    for v, c in constraint:
        if not 0 <= v < g.n:
            raise InvalidInputError(f"constraint vertex {v} not in graph")
        if c < 1:
            raise InvalidInputError("constraint colours must be >= 1")
        forbidden[v] = forbidden.get(v, 0) | 1 << c
    return forbidden


def k_colouring(
    g: Graph,
    k: int,
    constraint: Iterable[tuple[int, int]] = (),
    budget: SearchBudget | Meter | None = None,
) -> Colouring | None:
    """A proper colouring with colours in ``1..k`` honouring ``(vertex, forbidden colour)`` pairs."""
    if k < 0:
        raise InvalidInputError("k must be non-negative")
    res = _k_colour(g, k, _constraint_masks(g, constraint), as_meter(budget))
    return Colouring(tuple(res)) if res is not None else None


def constrained_optimal_colouring(
    g: Graph,
    k: int,
    constraint: Iterable[tuple[int, int]] = (),
    budget: SearchBudget | Meter | None = None,
) -> Colouring | None:
    if k < 1:
        raise InvalidInputError("k must be at least 1")
    return k_colouring(g, k, constraint, budget)


def chromatic_number(g: Graph, budget: SearchBudget | Meter | None = None) -> tuple[int, Colouring]:
    """Exact chromatic number with an optimal colouring as witness.

    Tries k = ω, ω+1, ... below the DSATUR heuristic bound; the first
    feasible k is χ.
    """
    meter = as_meter(budget)
    if g.n == 0:
        return 0, Colouring(())
    upper = _dsatur_greedy(g)
    ub = max(upper)
    lb = max_clique_in(g.adj, g.full_mask, meter).bit_count()
    for k in range(lb, ub):
        res = _k_colour(g, k, {}, meter)
        if res is not None:
            return k, Colouring(tuple(res))
    return ub, Colouring(tuple(upper))


# ---------------------------------------------------------------------------
# perfection


def find_long_odd_hole(g: Graph, budget: SearchBudget | Meter | None = None) -> list[int] | None:
    """An induced odd cycle of length >= 5, listed in cycle order, or None."""
    meter = as_meter(budget)
    adj = g.adj

    def extend(path: list[int], on_path: int, banned: int, s: int) -> list[int] | None:
        # banned: closed neighbourhoods of the interior vertices except the last one
        meter.tick()
        last = path[-1]
        higher = ~((2 << s) - 1)
        for y in iter_bits(adj[last] & higher & ~on_path & ~banned):
            if adj[y] >> s & 1:
                length = len(path) + 1
                if length >= 5 and length % 2 == 1:
                    return path + [y]
                continue
            new_banned = banned | adj[last]
            found = extend(path + [y], on_path | 1 << y, new_banned, s)
            if found:
                return found
        return None

    for s in range(g.n):
        for a in iter_bits(adj[s] & ~((2 << s) - 1)):
            found = extend([s, a], 1 << s | 1 << a, 0, s)
            if found:
                return found
    return None


def is_perfect_small(g: Graph, budget: SearchBudget | Meter | None = None) -> bool:
    """No odd hole and no odd antihole (via the strong perfect graph theorem)."""
    meter = as_meter(budget)
    return find_long_odd_hole(g, meter) is None and find_long_odd_hole(complement(g), meter) is None
