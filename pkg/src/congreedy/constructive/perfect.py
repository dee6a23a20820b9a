"""Good connected orderings of perfect graphs from any start vertex.

The construction recurses on the chromatic number.  A colouring is first
improved until the start vertex *reaches* every vertex, where a step into
a top-coloured vertex must use an edge lying in a clique of full size.
Deleting the top colour class then splits the graph into components that
are ordered recursively and stitched together through top-coloured
vertices, each of which is forced onto the top colour by its clique.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..errors import InvalidInputError, NotPerfectError
from ..exact import Meter, SearchBudget, as_meter, chromatic_number, edge_in_k_clique, is_perfect_small, k_colouring
from ..graph import Graph, component_masks, induced_subgraph, is_connected, iter_bits, mask_of
from ..greedy import Colouring, greedy_colouring, is_connected_ordering

Budget = SearchBudget | Meter | None


class _CliqueEdges:
    """Memoised ``edge_in_k_clique`` for one graph and one k."""

    def __init__(self, g: Graph, k: int, meter: Meter):
        self.g, self.k, self.meter = g, k, meter
        self._memo: dict[tuple[int, int], bool] = {}

    def __call__(self, x: int, y: int) -> bool:
        key = (x, y) if x < y else (y, x)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo[key] = edge_in_k_clique(self.g, x, y, self.k, self.meter)
        return hit


def _check_phi(g: Graph, phi: Colouring, v: int, k: int) -> None:
    if not phi.is_proper(g):
        raise InvalidInputError("colouring is not proper")
    if phi.max_colour > k:
        raise InvalidInputError(f"colouring uses colours above {k}")
    if phi[v] == k:
        raise InvalidInputError("start vertex must not carry colour k")


def _reach_bfs(
    g: Graph, phi: Colouring, v: int, k: int, in_clique: _CliqueEdges
) -> tuple[list[int], dict[int, int]]:
    """Visit order and BFS parents of the vertices reached from ``v``."""
    order = [v]
    parent: dict[int, int] = {}
    seen = 1 << v
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in iter_bits(g.adj[x] & ~seen):
            if phi[y] == k and not in_clique(x, y):
                continue
            seen |= 1 << y
            parent[y] = x
            order.append(y)
            queue.append(y)
    return order, parent


def reachable_set(g: Graph, phi: Colouring, v: int, k: int, budget: Budget = None) -> frozenset[int]:
    _check_phi(g, phi, v, k)
    order, _ = _reach_bfs(g, phi, v, k, _CliqueEdges(g, k, as_meter(budget)))
    return frozenset(order)


def _reaching_colouring(g: Graph, v: int, k: int, meter: Meter) -> tuple[Colouring, int]:
    if k < 2:
        raise InvalidInputError("k must be at least 2")
    if not is_connected(g):
        raise InvalidInputError("graph is not connected")
    phi = k_colouring(g, k, [(v, k)], meter)
    if phi is None:
        raise InvalidInputError(f"graph is not {k}-colourable")
    in_clique = _CliqueEdges(g, k, meter)
    full = g.full_mask
    for iteration in range(g.n + 1):
        order, _ = _reach_bfs(g, phi, v, k, in_clique)
        a_mask = mask_of(order)
        if a_mask == full:
            return phi, iteration
        b_mask = full & ~a_mask
        for x in iter_bits(a_mask):
            for y in iter_bits(g.adj[x] & b_mask):
                if phi[y] != k or in_clique(x, y):
                    raise NotPerfectError(f"edge {x}{y} leaves the reached set illegally")
        u = next(y for y in iter_bits(b_mask) if g.adj[y] & a_mask)
        sub_b, back_b = induced_subgraph(g, iter_bits(b_mask))
        rho = k_colouring(sub_b, k, [(back_b.index(u), k)], meter)
        if rho is None:
            raise NotPerfectError("unreached part admits no suitable k-colouring")
        s_b = mask_of(back_b[i] for i in range(sub_b.n) if rho[i] == k)
        s_a = mask_of(x for x in iter_bits(a_mask) if phi[x] == k)
        top = s_a | s_b
        if any(g.adj[x] & top for x in iter_bits(top)):
            raise NotPerfectError("new top colour class is not independent")
        sub_rest, back_rest = induced_subgraph(g, iter_bits(full & ~top))
        gamma = k_colouring(sub_rest, k - 1, (), meter)
        if gamma is None:
            raise NotPerfectError(f"no {k - 1}-colouring after removing the top class; input is not perfect")
        colours = [k] * g.n
        for i, x in enumerate(back_rest):
            colours[x] = gamma[i]
        phi = Colouring(tuple(colours))
        grown = mask_of(_reach_bfs(g, phi, v, k, in_clique)[0])
        if a_mask & ~grown or not grown >> u & 1:
            raise NotPerfectError("reached set did not grow")
    raise NotPerfectError("improvement loop did not terminate")


def reaching_colouring(g: Graph, v: int, k: int, budget: Budget = None) -> Colouring:
    """A k-colouring of a connected perfect graph from which ``v`` reaches every vertex."""
    return _reaching_colouring(g, v, k, as_meter(budget))[0]


@dataclass
class PerfectRun:
    ordering: list[int]
    chi: int
    stitches: list[tuple[int, int]] = field(default_factory=list)  # (vertex, colour it must get)
    depth: int = 0


def _perfect_order(
    g: Graph, v: int, meter: Meter, level: int, run_depth: list[int]
) -> tuple[list[int], list[tuple[int, int]], int]:
    run_depth[0] = max(run_depth[0], level)
    k, _ = chromatic_number(g, meter)
    if k == 1:
        return [v], [], k
    phi, _ = _reaching_colouring(g, v, k, meter)
    top = phi.class_mask(k)
    order_bfs, parent = _reach_bfs(g, phi, v, k, _CliqueEdges(g, k, meter))
    pos = {x: i for i, x in enumerate(order_bfs)}
    comps = component_masks(g, g.full_mask & ~top)
    first = next(c for c in comps if c >> v & 1)

    # order the other components by the first top-coloured neighbour the reach BFS visits
    keyed = []
    for comp in comps:
        if comp == first:
            continue
        border = 0
        for x in iter_bits(comp):
            border |= g.adj[x]
        s = min(iter_bits(border & top), key=pos.__getitem__)
        keyed.append((pos[s], comp & -comp, comp, s))
    keyed.sort()

    stitches: list[tuple[int, int]] = []

    def recurse(comp: int, start: int) -> list[int]:
        sub, back = induced_subgraph(g, iter_bits(comp))
        inner, inner_stitches, _ = _perfect_order(sub, back.index(start), meter, level + 1, run_depth)
        stitches.extend((back[x], c) for x, c in inner_stitches)
        return [back[i] for i in inner]

    ordering = recurse(first, v)
    placed = mask_of(ordering)
    for _, _, comp, s in keyed:
        if not placed >> parent[s] & 1:
            raise NotPerfectError("stitching vertex is not reached through a placed vertex")
        if not placed >> s & 1:
            ordering.append(s)
            stitches.append((s, k))
            placed |= 1 << s
        start = next(iter_bits(g.adj[s] & comp))
        part = recurse(comp, start)
        ordering += part
        placed |= mask_of(part)
    ordering += iter_bits(top & ~placed)
    return ordering, stitches, k


def perfect_run(g: Graph, v: int, budget: Budget = None, trusted_perfect: bool = False) -> PerfectRun:
    """Build and certify a good connected ordering of ``g`` starting at ``v``."""
    if g.n == 0:
        raise InvalidInputError("empty graph has no ordering")
    if not 0 <= v < g.n:
        raise InvalidInputError(f"start vertex {v} not in graph")
    if not is_connected(g):
        raise InvalidInputError("graph is not connected")
    meter = as_meter(budget)
    if not trusted_perfect and not is_perfect_small(g, meter):
        raise NotPerfectError("graph has an odd hole or odd antihole")
    depth = [0]
    ordering, stitches, k = _perfect_order(g, v, meter, 1, depth)
    replay = greedy_colouring(g, ordering)
    if ordering[0] != v or not is_connected_ordering(g, ordering):
        raise NotPerfectError("constructed ordering is not connected from the start vertex")
    if replay.max_colour != k or any(replay[s] != c for s, c in stitches):
        raise NotPerfectError(f"constructed ordering uses {replay.max_colour} colours, expected {k}")
    return PerfectRun(ordering, k, stitches, depth[0])


def perfect_good_ordering(g: Graph, v: int, budget: Budget = None, trusted_perfect: bool = False) -> list[int]:
    return perfect_run(g, v, budget, trusted_perfect).ordering
