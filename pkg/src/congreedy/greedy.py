"""First-Fit colouring along vertex orderings and the conversions between
orderings and colourings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidInputError
from .graph import Graph, component_masks, iter_bits, mask_of

Ordering = list[int]


@dataclass(frozen=True)
class Colouring:
    """Colour of each vertex, indexed by vertex id; colours start at 1."""

    colours: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c < 1 for c in self.colours):
            raise InvalidInputError("colours must be positive integers")

    @classmethod
    def of(cls, colours: Iterable[int]) -> Colouring:
        return cls(tuple(colours))

    def __getitem__(self, v: int) -> int:
        return self.colours[v]

    def __len__(self) -> int:
        return len(self.colours)

    @property
    def max_colour(self) -> int:
        return max(self.colours, default=0)

    def is_proper(self, g: Graph) -> bool:
        return len(self.colours) == g.n and all(self.colours[u] != self.colours[v] for u, v in g.edges)

    def class_mask(self, colour: int) -> int:
        return mask_of(v for v, c in enumerate(self.colours) if c == colour)

    def to_list(self) -> list[int]:
        return list(self.colours)


class SeededRun(NamedTuple):
    colouring: Colouring
    max_after_first: int


def check_permutation(g: Graph, order: Sequence[int]) -> None:
    if len(order) != g.n or sorted(order) != list(range(g.n)):
        raise InvalidInputError(f"ordering is not a permutation of 0..{g.n - 1}")


def first_fit(adj: Sequence[int], classes: Sequence[int], v: int) -> int:
    """Smallest colour whose class (``classes[c-1]``) avoids every neighbour of ``v``."""
    nb = adj[v]
    c = 1
    for cls in classes:
        if not cls & nb:
            return c
        c += 1
    return c


def _run(g: Graph, order: Sequence[int], seed: int | None) -> list[int]:
    colours = [0] * g.n
    classes: list[int] = []
    adj = g.adj
    for i, v in enumerate(order):
        c = seed if (i == 0 and seed is not None) else first_fit(adj, classes, v)
        while len(classes) < c:
            classes.append(0)
        classes[c - 1] |= 1 << v
        colours[v] = c
    return colours


def greedy_colouring(g: Graph, order: Sequence[int]) -> Colouring:
    check_permutation(g, order)
    return Colouring(tuple(_run(g, order, None)))


def seeded_greedy(g: Graph, order: Sequence[int], seed: int) -> SeededRun:
    """Give ``order[0]`` colour ``seed`` and colour the rest First-Fit.

    The second field is the largest colour among ``order[1:]`` (0 when n = 1).
    """
    check_permutation(g, order)
    if seed < 1:
        raise InvalidInputError("seed colour must be >= 1")
    colours = _run(g, order, seed) if g.n else []
    rest = max((colours[v] for v in order[1:]), default=0)
    return SeededRun(Colouring(tuple(colours)), rest)


def is_connected_ordering(g: Graph, order: Sequence[int]) -> bool:
    """Every prefix induces a connected subgraph."""
    seen = 0
    for i, v in enumerate(order):
        if i and not g.adj[v] & seen:
            return False
        seen |= 1 << v
    return True


def ordering_from_colouring(g: Graph, c: Colouring) -> Ordering:
    """Vertices by ascending colour, ties by id.

    First-Fit along the result gives every vertex a colour no larger than
    its colour under ``c``.
    """
    if not c.is_proper(g):
        raise InvalidInputError("colouring is not proper")
    return sorted(range(g.n), key=lambda v: (c[v], v))


def extend_via_dominating(
    g: Graph, c: Colouring, h_vertices: Iterable[int], order_h: Sequence[int]
) -> Ordering:
    """Extend a connected ordering of a dominating subgraph H to all of ``g``.

    ``order_h`` must be a connected ordering of ``g[H]`` whose greedy run
    reproduces ``c`` on H.  The remaining vertices follow by ascending
    ``c``-colour, so the full greedy run never exceeds ``c.max_colour``.
    """
    if not c.is_proper(g):
        raise InvalidInputError("colouring is not proper")
    h_mask = mask_of(h_vertices)
    if sorted(order_h) != list(iter_bits(h_mask)):
        raise InvalidInputError("order_h is not a permutation of H")
    if h_mask == 0 and g.n:
        raise InvalidInputError("not dominating: H is empty")
    if len(component_masks(g, h_mask)) > 1:
        raise InvalidInputError("not connected: H is disconnected")
    outside = g.full_mask & ~h_mask
    for v in iter_bits(outside):
        if not g.adj[v] & h_mask:
            raise InvalidInputError(f"not dominating: vertex {v} has no neighbour in H")
    if not is_connected_ordering(g, order_h):
        raise InvalidInputError("not connected: order_h is not a connected ordering of H")

    classes: list[int] = []
    for v in order_h:
        col = first_fit(g.adj, classes, v)
        if col != c[v]:
            raise InvalidInputError(f"greedy disagrees: vertex {v} gets {col}, colouring says {c[v]}")
        while len(classes) < col:
            classes.append(0)
        classes[col - 1] |= 1 << v

    rest = sorted(iter_bits(outside), key=lambda v: (c[v], v))
    for v in rest:
        col = first_fit(g.adj, classes, v)
        assert col <= c[v], f"vertex {v}: greedy {col} above colouring {c[v]}"
        while len(classes) < col:
            classes.append(0)
        classes[col - 1] |= 1 << v
    return list(order_h) + rest
