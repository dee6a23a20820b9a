"""Deterministic and random graph families used by the CLI and the test suite.

Random generators take a :class:`random.Random` so every run is replayable
from a seed.  All random families return connected graphs.
"""

from __future__ import annotations

import random

from .errors import InvalidInputError
from .graph import Graph, component_masks, induced_subgraph, iter_bits


def complete(k: int) -> Graph:
    return Graph.from_edges(k, ((i, j) for i in range(k) for j in range(i + 1, k)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidInputError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def knn_minus_matching(n: int) -> Graph:
    """K_{n,n} with the perfect matching ``i -- n+i`` removed.

    Sides are ``0..n-1`` and ``n..2n-1``.
    """
    if n < 1:
        raise InvalidInputError("n must be positive")
    return Graph.from_edges(2 * n, ((i, n + j) for i in range(n) for j in range(n) if i != j))


def _spanning_tree_edges(rng: random.Random, vertices: list[int]) -> list[tuple[int, int]]:
    return [(vertices[i], vertices[rng.randrange(i)]) for i in range(1, len(vertices))]


def random_connected(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = set(_spanning_tree_edges(rng, rng.sample(range(n), n)))
    edges |= {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    return Graph.from_edges(n, edges)


def random_connected_bipartite(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    """Sides ``0..a-1`` and ``a..n-1``; a random alternating spanning tree plus random cross edges."""
    if n < 2:
        return Graph(n, frozenset())
    a = rng.randint(1, n - 1)
    left, right = list(range(a)), list(range(a, n))
    edges = {(rng.choice(left), rng.choice(right))}
    placed = [[x for x, _ in edges], [y for _, y in edges]]
    rest = [v for v in range(n) if v not in placed[0] and v not in placed[1]]
    for v in rng.sample(rest, len(rest)):
        side = 0 if v < a else 1
        edges.add((v, rng.choice(placed[1 - side])))
        placed[side].append(v)
    edges |= {(i, j) for i in left for j in right if rng.random() < p}
    return Graph.from_edges(n, edges)


def _glue_blocks(rng: random.Random, n: int, make_block) -> Graph:
    """Attach blocks at random existing vertices until ``n`` vertices exist."""
    edges: set[tuple[int, int]] = set()
    count = 1
    while count < n:
        size = min(n - count, rng.randint(1, 4))
        anchor = rng.randrange(count)
        members = [anchor] + list(range(count, count + size))
        edges |= set(make_block(rng, members))
        count += size
    return Graph.from_edges(n, edges)


def random_block_graph(rng: random.Random, n: int) -> Graph:
    """Connected graph whose blocks are cliques."""
    return _glue_blocks(
        rng, n, lambda _r, m: [(m[i], m[j]) for i in range(len(m)) for j in range(i + 1, len(m))]
    )


def random_cactus(rng: random.Random, n: int) -> Graph:
    """Connected graph whose blocks are cycles (or single edges)."""

    def ring(_r: random.Random, m: list[int]) -> list[tuple[int, int]]:
        if len(m) == 2:
            return [(m[0], m[1])]
        return [(m[i], m[(i + 1) % len(m)]) for i in range(len(m))]

    return _glue_blocks(rng, n, ring)


def random_k4_minor_free(rng: random.Random, n: int, keep: float = 0.7) -> Graph:
    """Random partial 2-tree: grow a 2-tree, then delete edges while staying connected."""
    if n <= 2:
        return path(n)
    edges = [(0, 1), (0, 2), (1, 2)]
    for v in range(3, n):
        a, b = rng.choice(edges)
        edges += [(a, v), (b, v)]
    g = Graph.from_edges(n, edges)
    present = set(g.edges)
    for e in rng.sample(sorted(present), len(present)):
        if rng.random() < keep:
            continue
        trial = Graph.from_edges(n, present - {e})
        if len(component_masks(trial)) == 1:
            present.discard(e)
    return Graph.from_edges(n, present)


def random_poset(rng: random.Random, n: int, p: float | None = None) -> tuple[Graph, list[tuple[int, int]]]:
    """Comparability graph of the transitive closure of a random DAG on ``0 < 1 < ... < n-1``.

    Returns the graph and the closure arcs (a, b) with a < b.  Extra relations
    are added between components until the graph is connected.
    """
    if p is None:
        p = min(0.5, 2.5 / max(n, 1))
    succ = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                succ[i] |= 1 << j

    def close() -> None:
        for i in range(n - 1, -1, -1):
            acc = succ[i]
            for j in iter_bits(succ[i]):
                acc |= succ[j]
            succ[i] = acc

    while True:
        close()
        arcs = [(i, j) for i in range(n) for j in iter_bits(succ[i])]
        g = Graph.from_edges(n, arcs)
        comps = component_masks(g)
        if len(comps) <= 1:
            return g, arcs
        x = rng.choice(list(iter_bits(comps[0])))
        y = rng.choice(list(iter_bits(comps[1])))
        a, b = min(x, y), max(x, y)
        succ[a] |= 1 << b


def random_chordal(rng: random.Random, n: int, k: int | None = None, extra: int = 3) -> Graph:
    """Random connected chordal graph: a random k-tree with some vertices deleted.

    Induced subgraphs of chordal graphs are chordal; the largest remaining
    component is relabelled to ``0..n'-1`` (so the result may have fewer than
    ``n`` vertices).
    """
    if k is None:
        k = rng.randint(1, 3)
    total = n + extra
    k = max(1, min(k, total - 1))
    cliques = [tuple(range(k + 1))]
    edges = {(i, j) for i in range(k + 1) for j in range(i + 1, k + 1)}
    for v in range(k + 1, total):
        base = rng.choice(cliques)
        drop = rng.randrange(len(base))
        face = base[:drop] + base[drop + 1 :]
        edges |= {(w, v) for w in face}
        cliques.append(face + (v,))
    g = Graph.from_edges(total, edges)
    doomed = set(rng.sample(range(total), extra))
    keep = 0
    for v in range(total):
        if v not in doomed:
            keep |= 1 << v
    biggest = max(component_masks(g, keep), key=lambda m: (m.bit_count(), -(m & -m)))
    return induced_subgraph(g, iter_bits(biggest))[0]


def random_perfect(rng: random.Random, n: int) -> tuple[str, Graph]:
    """One of chordal / bipartite / comparability, chosen uniformly."""
    kind = rng.choice(["chordal", "bipartite", "comparability"])
    if kind == "chordal":
        return kind, random_chordal(rng, n)
    if kind == "bipartite":
        return kind, random_connected_bipartite(rng, n)
    return kind, random_poset(rng, n, p=rng.uniform(0.15, 0.5))[0]
