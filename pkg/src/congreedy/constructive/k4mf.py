"""Good connected orderings of K4-minor-free graphs by low-degree peeling."""

from __future__ import annotations

from ..errors import InvalidInputError
from ..graph import Graph, bfs_order, bipartition, is_connected, is_connected_mask, iter_bits, recognize


def _peelable(g: Graph, alive: int) -> int | None:
    for v in iter_bits(alive):
        if (g.adj[v] & alive).bit_count() <= 2 and is_connected_mask(g, alive & ~(1 << v)):
            return v
    return None


def removable_low_degree_vertex(g: Graph) -> int:
    """Smallest vertex of degree at most 2 whose deletion keeps ``g`` connected."""
    if g.n < 2:
        raise InvalidInputError("need at least two vertices")
    if not is_connected(g):
        raise InvalidInputError("graph is not connected")
    if not recognize(g, "k4-minor-free"):
        raise InvalidInputError("graph has a K4 minor")
    v = _peelable(g, g.full_mask)
    if v is None:
        raise InvalidInputError("no removable vertex of degree <= 2")
    return v


def k4mf_good_ordering(g: Graph) -> list[int]:
    """A connected ordering whose greedy colouring uses χ(g) <= 3 colours.

    Bipartite inputs get a BFS order; otherwise vertices are peeled one at a
    time (degree <= 2, connectivity preserved) and the peeling is reversed,
    so every vertex sees at most two earlier neighbours.
    """
    if g.n == 0:
        raise InvalidInputError("empty graph has no ordering")
    if not is_connected(g):
        raise InvalidInputError("graph is not connected")
    if not recognize(g, "k4-minor-free"):
        raise InvalidInputError("graph has a K4 minor")
    if bipartition(g) is not None:
        return bfs_order(g, 0)
    alive = g.full_mask
    peeled = []
    while alive:
        v = _peelable(g, alive)
        if v is None:  # impossible for K4-minor-free input
            raise InvalidInputError("no removable vertex of degree <= 2")
        peeled.append(v)
        alive &= ~(1 << v)
    peeled.reverse()
    return peeled
