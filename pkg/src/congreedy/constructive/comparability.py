"""Transitive orientations, height colourings and good connected orderings
of comparability graphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from ..errors import InvalidInputError
from ..graph import Graph, bfs_order, component_masks, is_connected, iter_bits, mask_of
from ..greedy import Colouring, extend_via_dominating


@dataclass(frozen=True)
class Orientation:
    n: int
    arcs: frozenset[tuple[int, int]]

    @classmethod
    def of(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Orientation:
        return cls(n, frozenset(arcs))

    @cached_property
    def succ(self) -> tuple[int, ...]:
        out = [0] * self.n
        for a, b in self.arcs:
            out[a] |= 1 << b
        return tuple(out)

    @cached_property
    def pred(self) -> tuple[int, ...]:
        inc = [0] * self.n
        for a, b in self.arcs:
            inc[b] |= 1 << a
        return tuple(inc)

    def covers(self, g: Graph) -> bool:
        return len(self.arcs) == g.m and all((min(a, b), max(a, b)) in g.edges for a, b in self.arcs)

    def is_transitive(self) -> bool:
        succ = self.succ
        return all(succ[b] & ~succ[a] == 0 for a, b in self.arcs)

    def topological_order(self) -> list[int] | None:
        """Kahn's algorithm, smallest id first; None if there is a directed cycle."""
        indeg = [p.bit_count() for p in self.pred]
        ready = [v for v in range(self.n) if indeg[v] == 0]
        order = []
        while ready:
            ready.sort(reverse=True)
            v = ready.pop()
            order.append(v)
            for w in iter_bits(self.succ[v]):
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
        return order if len(order) == self.n else None

    def is_acyclic(self) -> bool:
        return self.topological_order() is not None

    def minimal(self) -> list[int]:
        return [v for v in range(self.n) if not self.pred[v]]

    def maximal(self) -> list[int]:
        return [v for v in range(self.n) if not self.succ[v]]


def transitive_orientation(g: Graph) -> Orientation | None:
    """A transitive acyclic orientation of ``g``, or None if ``g`` is not a comparability graph.

    Implication classes are peeled one at a time: each class is grown by
    forcing inside the edges not yet claimed by earlier classes, then removed.
    An edge forced both ways inside its class rules out a transitive
    orientation.  The union is verified before being returned.
    """
    residual = list(g.adj)
    arcs: set[tuple[int, int]] = set()
    for u, v in g.sorted_edges():
        if not residual[u] >> v & 1:
            continue
        direction = {(u, v): (u, v)}
        stack = [(u, v)]
        while stack:
            a, b = stack.pop()
            # a->b forces a->b2 when b2 ~ a but b2 !~ b, and a2->b when a2 ~ b but a2 !~ a
            forced = [(a, b2) for b2 in iter_bits(residual[a] & ~residual[b] & ~(1 << b))]
            forced += [(a2, b) for a2 in iter_bits(residual[b] & ~residual[a] & ~(1 << a))]
            for x, y in forced:
                key = (x, y) if x < y else (y, x)
                seen = direction.get(key)
                if seen is None:
                    direction[key] = (x, y)
                    stack.append((x, y))
                elif seen != (x, y):
                    return None
        for (x, y), arc in direction.items():
            residual[x] &= ~(1 << y)
            residual[y] &= ~(1 << x)
            arcs.add(arc)
    o = Orientation(g.n, frozenset(arcs))
    if not (o.is_transitive() and o.is_acyclic()):
        return None
    return o


def height_function(g: Graph, o: Orientation) -> list[int]:
    if not o.covers(g):
        raise InvalidInputError("orientation does not match the edge set")
    topo = o.topological_order()
    if topo is None or not o.is_transitive():
        raise InvalidInputError("orientation is not transitive and acyclic")
    h = [0] * g.n
    for v in topo:
        h[v] = 1 + max((h[w] for w in iter_bits(o.pred[v])), default=0)
    return h


def height_colouring(g: Graph, o: Orientation) -> Colouring:
    """Colour each element by its level; the top level equals the longest chain."""
    return Colouring(tuple(height_function(g, o)))


def swapped_height_colouring(g: Graph, o: Orientation) -> Colouring:
    """Optimal colouring with minimal elements on 1 and maximal elements on 2.

    Maximal elements are moved to the top colour k, then classes 2 and k
    are exchanged.  Requires height >= 2 (no isolated vertices).
    """
    h = height_function(g, o)
    k = max(h, default=0)
    maxima = mask_of(o.maximal())
    swap = {2: k, k: 2}
    colours = []
    for v in range(g.n):
        c = k if maxima >> v & 1 else h[v]
        colours.append(swap.get(c, c))
    return Colouring(tuple(colours))


def comparability_good_ordering(g: Graph) -> list[int]:
    """A connected ordering whose greedy colouring uses exactly the height of a poset of ``g``."""
    if g.n == 0:
        raise InvalidInputError("empty graph has no ordering")
    if not is_connected(g):
        raise InvalidInputError("graph is not connected")
    o = transitive_orientation(g)
    if o is None:
        raise InvalidInputError("not a comparability graph")
    height = max(height_function(g, o))
    if height <= 2:
        return bfs_order(g, 0)
    c = swapped_height_colouring(g, o)
    h_mask = c.class_mask(1) | c.class_mask(2)
    if len(component_masks(g, h_mask)) != 1:
        raise InvalidInputError("subgraph on colours 1 and 2 is disconnected")
    start = min(o.minimal())
    order_h = bfs_order(g, start, within=h_mask)
    return extend_via_dominating(g, c, iter_bits(h_mask), order_h)
