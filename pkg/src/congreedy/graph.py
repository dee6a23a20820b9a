"""Simple undirected graphs on vertices ``0..n-1`` and structural queries.

Adjacency is stored as one Python ``int`` bitmask per vertex; most of the
search code elsewhere in the package works directly on those masks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Literal, Sequence

from .errors import GraphParseError, InvalidInputError

GraphClass = Literal["bipartite", "block", "cactus", "k4-minor-free"]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidInputError("vertex count must be non-negative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise InvalidInputError(f"edge {(u, v)} is not a normalised pair in 0..{self.n - 1}")
        if self.labels is not None and len(self.labels) != self.n:
            raise InvalidInputError("labels must have one entry per vertex")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
    ) -> Graph:
        """Build a graph, normalising pair order and collapsing duplicates."""
        norm = set()
        for u, v in edges:
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge {(u, v)} out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(norm), tuple(labels) if labels is not None else None)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the isomorphic copy where vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidInputError("relabelling must be a permutation of the vertices")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))


# ---------------------------------------------------------------------------
# parsing and serialisation


def parse_graph(text: str, fmt: str = "dimacs") -> Graph:
    """Parse DIMACS ``.col`` text (``fmt="dimacs"``) or a 0-based edge list (``fmt="edges"``)."""
    if fmt in ("dimacs", "dimacs-col", "col"):
        return _parse_dimacs(text)
    if fmt in ("edges", "edge-list"):
        return _parse_edge_list(text)
    raise GraphParseError(f"unknown graph format {fmt!r}")


def _parse_dimacs(text: str) -> Graph:
    n: int | None = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphParseError(f"malformed header {line!r}", lineno)
            try:
                n, _declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphParseError(f"malformed header {line!r}", lineno) from None
            if n < 0:
                raise GraphParseError("negative vertex count", lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphParseError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise GraphParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError(f"malformed edge line {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"vertex id out of range 1..{n}", lineno)
            if u == v:
                raise GraphParseError(f"self-loop at vertex {u}", lineno)
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise GraphParseError(f"unrecognised line {line!r}", lineno)
    if n is None:
        raise GraphParseError("missing problem line 'p edge <n> <m>'")
    return Graph(n, frozenset(edges))


def _parse_edge_list(text: str) -> Graph:
    edges: set[tuple[int, int]] = set()
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphParseError("vertex ids must be non-negative", lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        edges.add((min(u, v), max(u, v)))
        n = max(n, u + 1, v + 1)
    return Graph(n, frozenset(edges))


def format_dimacs(g: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def format_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.sorted_edges())


# ---------------------------------------------------------------------------
# connectivity


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g[within]`` as bitmasks, ordered by smallest vertex."""
    remaining = g.full_mask if within is None else within
    adj = g.adj
    comps = []
    while remaining:
        frontier = remaining & -remaining
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & remaining & ~comp
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected_mask(g: Graph, mask: int) -> bool:
    if mask == 0:
        return True
    return len(component_masks(g, mask)) == 1


def is_connected(g: Graph) -> bool:
    """True iff ``g`` has at most one component (the empty graph counts as connected)."""
    return is_connected_mask(g, g.full_mask)


def connected_components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(iter_bits(c)) for c in component_masks(g)]


def bfs_order(g: Graph, root: int, within: int | None = None) -> list[int]:
    """BFS from ``root`` inside ``within``; neighbours are visited by ascending id."""
    allowed = g.full_mask if within is None else within
    seen = 1 << root
    order = [root]
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in iter_bits(g.adj[x] & allowed & ~seen):
            seen |= 1 << y
            order.append(y)
            queue.append(y)
    return order


def _require_connected(g: Graph, what: str) -> None:
    if not is_connected(g):
        raise InvalidInputError(f"{what} requires a connected graph")


def _blocks(g: Graph) -> tuple[set[int], list[frozenset[int]]]:
    """Iterative Hopcroft-Tarjan: cut vertices and biconnected components."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cuts: set[int] = set()
    blocks: list[frozenset[int]] = []
    nbrs = [g.neighbours(v) for v in range(n)]
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        if not nbrs[root]:
            blocks.append(frozenset([root]))
            continue
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(nbrs[root]))]
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(nbrs[w])))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                comp = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (parent, v):
                        break
                blocks.append(frozenset(comp))
        if root_children > 1:
            cuts.add(root)
    return cuts, blocks


def cut_vertices(g: Graph) -> frozenset[int]:
    _require_connected(g, "cut_vertices")
    return frozenset(_blocks(g)[0])


def biconnected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the blocks of a connected graph, sorted by their smallest members."""
    _require_connected(g, "biconnected_components")
    if g.n == 0:
        return []
    return sorted(_blocks(g)[1], key=sorted)


# ---------------------------------------------------------------------------
# derived graphs


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``g[s]`` and the table mapping each new vertex id to its id in ``g``.

    New ids follow ascending order of the original ids.
    """
    old = sorted(set(s))
    for v in old:
        if not 0 <= v < g.n:
            raise InvalidInputError(f"vertex {v} not in graph")
    new_of = {v: i for i, v in enumerate(old)}
    keep = mask_of(old)
    edges = []
    for v in old:
        for w in iter_bits(g.adj[v] & keep):
            if v < w:
                edges.append((new_of[v], new_of[w]))
    labels = tuple(g.labels[v] for v in old) if g.labels is not None else None
    return Graph(len(old), frozenset(edges), labels), old


def complement(g: Graph) -> Graph:
    full = g.full_mask
    edges = [(u, v) for u in range(g.n) for v in iter_bits(full & ~g.adj[u] & ~((2 << u) - 1))]
    return Graph(g.n, frozenset(edges), g.labels)


# ---------------------------------------------------------------------------
# recognisers


def bipartition(g: Graph) -> list[int] | None:
    """A proper 2-colouring with sides 0/1 (BFS per component), or None if an odd cycle exists."""
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in iter_bits(g.adj[x]):
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    return side


def is_clique_mask(g: Graph, mask: int) -> bool:
    return all((g.adj[v] | 1 << v) & mask == mask for v in iter_bits(mask))


def _is_cycle_block(g: Graph, block: frozenset[int]) -> bool:
    if len(block) <= 2:
        return True
    mask = mask_of(block)
    return all((g.adj[v] & mask).bit_count() == 2 for v in block)


def _reduces_to_empty(g: Graph) -> bool:
    nbrs = {v: set(g.neighbours(v)) for v in range(g.n)}
    pending = deque(v for v in range(g.n) if len(nbrs[v]) <= 2)
    while pending:
        v = pending.popleft()
        if v not in nbrs or len(nbrs[v]) > 2:
            continue
        around = nbrs.pop(v)
        for w in around:
            nbrs[w].discard(v)
        if len(around) == 2:
            a, b = around
            # the working graph stays simple: a parallel edge is dropped on creation
            nbrs[a].add(b)
            nbrs[b].add(a)
        pending.extend(w for w in around if len(nbrs[w]) <= 2)
    return not nbrs


def recognize(g: Graph, cls: GraphClass) -> bool:
    if cls == "bipartite":
        return bipartition(g) is not None
    if cls == "k4-minor-free":
        return _reduces_to_empty(g)
    if cls in ("block", "cactus"):
        for comp in component_masks(g):
            sub, _ = induced_subgraph(g, iter_bits(comp))
            for b in biconnected_components(sub):
                ok = is_clique_mask(sub, mask_of(b)) if cls == "block" else _is_cycle_block(sub, b)
                if not ok:
                    return False
        return True
    raise InvalidInputError(f"unknown graph class {cls!r}")
