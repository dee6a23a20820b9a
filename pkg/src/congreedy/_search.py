"""Memoised depth-first search over (connected) greedy runs.

A search state is the tuple of colour-class bitmasks of the vertices
coloured so far.  Greedy colours of later vertices depend only on that
tuple, so states reached by different prefixes share one memo entry.
``touch[c]`` caches the union of neighbourhoods of class ``c``: vertex
``w`` sees colour ``c + 1`` iff bit ``w`` of ``touch[c]`` is set.
"""

from __future__ import annotations

from .exact import Meter
from .graph import Graph, iter_bits


def _complete(g: Graph, prefix: list[int], connected: bool) -> list[int]:
    placed = 0
    for v in prefix:
        placed |= 1 << v
    order = list(prefix)
    rest = g.full_mask & ~placed
    while rest:
        if connected:
            reach = 0
            for v in iter_bits(placed):
                reach |= g.adj[v]
            pool = reach & rest
        else:
            pool = rest
        v = (pool & -pool).bit_length() - 1
        order.append(v)
        placed |= 1 << v
        rest &= ~(1 << v)
    return order


def low_run(g: Graph, k: int, meter: Meter, starts: list[int] | None = None) -> list[int] | None:
    """A connected ordering whose greedy run uses no colour above ``k``, or None."""
    n, adj, full = g.n, g.adj, g.full_mask
    if n == 0:
        return []
    if k < 1:
        return None
    dead: set[tuple[int, ...]] = set()
    classes = [0] * k
    touch = [0] * k
    order: list[int] = []

    def dfs(coloured: int, reach: int) -> bool:
        if coloured == full:
            return True
        key = tuple(classes)
        if key in dead:
            return False
        meter.tick()
        # mex only grows as neighbours get coloured: any vertex already seeing 1..k is lost
        blocked = ~coloured & full
        for t in touch:
            blocked &= t
        if not blocked:
            for w in iter_bits(reach & ~coloured):
                bit = 1 << w
                c = 0
                while touch[c] & bit:
                    c += 1
                old_t = touch[c]
                classes[c] |= bit
                touch[c] = old_t | adj[w]
                order.append(w)
                if dfs(coloured | bit, reach | adj[w]):
                    return True
                order.pop()
                classes[c] &= ~bit
                touch[c] = old_t
        dead.add(key)
        return False

    for s in starts if starts is not None else range(n):
        classes[0], touch[0] = 1 << s, adj[s]
        order.append(s)
        if dfs(1 << s, adj[s]):
            return list(order)
        order.pop()
        classes[0] = touch[0] = 0
    return None


def reach_run(
    g: Graph,
    target: int,
    meter: Meter,
    connected: bool,
    first: int | None = None,
    seed: int = 1,
) -> list[int] | None:
    """An ordering in which some vertex gets colour >= ``target``, or None.

    With ``first`` given, the ordering starts there and that vertex is
    pre-coloured ``seed``; it does not count towards the target.  Returned
    orderings are completed to full permutations (connected if requested).
    """
    n, adj, full = g.n, g.adj, g.full_mask
    if n == 0 or target < 1:
        return [] if target < 1 else None
    need = target - 1
    width = max(need, seed) + 1
    classes = [0] * width
    touch = [0] * width
    dead: set[tuple[int, ...]] = set()
    order: list[int] = []
    low = list(range(need))

    def hopeless(coloured: int) -> bool:
        free = full & ~coloured
        for w in iter_bits(free):
            bit = 1 << w
            missing = 0
            for c in low:
                if not touch[c] & bit:
                    missing += 1
            if missing <= (adj[w] & free).bit_count():
                return False
        return True

    def dfs(coloured: int, reach: int) -> bool:
        if coloured == full:
            return False
        key = tuple(classes)
        if key in dead:
            return False
        meter.tick()
        if not hopeless(coloured):
            pool = (reach if connected and coloured else full) & ~coloured
            moves = []
            for w in iter_bits(pool):
                bit = 1 << w
                c = 0
                while c < width and touch[c] & bit:
                    c += 1
                if c >= need:
                    order.append(w)
                    return True
                moves.append((c, w))
            moves.sort(key=lambda cw: (-cw[0], cw[1]))
            for c, w in moves:
                bit = 1 << w
                old_t = touch[c]
                classes[c] |= bit
                touch[c] = old_t | adj[w]
                order.append(w)
                if dfs(coloured | bit, reach | adj[w]):
                    return True
                order.pop()
                classes[c] &= ~bit
                touch[c] = old_t
        dead.add(key)
        return False

    def found() -> list[int]:
        return _complete(g, order, connected)

    if first is not None:
        c = seed - 1
        classes[c], touch[c] = 1 << first, adj[first]
        order.append(first)
        if dfs(1 << first, adj[first]):
            return found()
        return None
    if need == 0:
        return _complete(g, [0], connected)
    # from the empty state the first vertex is chosen like any other move
    if dfs(0, 0):
        return found()
    return None
