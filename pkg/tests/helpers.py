from congreedy import fixtures
from congreedy.graph import Graph


def fx(name: str) -> Graph:
    return fixtures.load(name).graph


def ids(g: Graph, labels) -> list[int]:
    return [fixtures.vertex_by_label(g, x) for x in labels]


def named(edges: str) -> Graph:
    """Graph on letters: ``named("ab bc")`` is P3 with a=0, b=1, c=2."""
    pairs = [tuple(e) for e in edges.split()]
    letters = sorted({x for p in pairs for x in p})
    pos = {x: i for i, x in enumerate(letters)}
    return Graph.from_edges(len(letters), ((pos[a], pos[b]) for a, b in pairs), tuple(letters))
