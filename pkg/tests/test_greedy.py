import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from congreedy.errors import InvalidInputError
from congreedy.exact import chromatic_number
from congreedy.generators import complete, cycle, path, random_connected
from congreedy.graph import Graph, bfs_order, component_masks, iter_bits, mask_of
from congreedy.greedy import (
    Colouring,
    extend_via_dominating,
    greedy_colouring,
    is_connected_ordering,
    ordering_from_colouring,
    seeded_greedy,
)
from helpers import fx, ids, named


@st.composite
def graph_and_order(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    order = draw(st.permutations(range(n)))
    return Graph.from_edges(n, chosen), list(order)


def test_fish_bad_ordering_uses_four_colours():
    fish = fx("fish")
    c = greedy_colouring(fish, ids(fish, ["v1", "v2", "v3", "v4", "v5", "v6"]))
    assert [c[v] for v in ids(fish, ["v1", "v2", "v3", "v4", "v5", "v6"])] == [1, 2, 3, 1, 2, 4]
    assert c.max_colour == 4


def test_gem_bad_ordering_uses_four_colours():
    gem = fx("gem")
    order = ids(gem, ["v1", "v2", "v3", "v4", "v5"])
    c = greedy_colouring(gem, order)
    assert [c[v] for v in order] == [1, 2, 2, 3, 4]


def test_complete_graph_any_order():
    for order in itertools.permutations(range(3)):
        c = greedy_colouring(complete(3), order)
        assert sorted(c.to_list()) == [1, 2, 3]


def test_non_permutation_rejected():
    with pytest.raises(InvalidInputError):
        greedy_colouring(path(3), [0, 0, 1])
    with pytest.raises(InvalidInputError):
        seeded_greedy(path(3), [0, 1], 1)


def test_seeded_examples():
    k2 = named("ab")
    run = seeded_greedy(k2, [0, 1], 5)
    assert run.colouring.to_list() == [5, 1]
    c4 = named("ab bc cd ad")
    run = seeded_greedy(c4, [0, 1, 2, 3], 2)
    assert run.colouring.to_list() == [2, 1, 2, 1]
    assert run.max_after_first == 2
    with pytest.raises(InvalidInputError):
        seeded_greedy(k2, [0, 1], 0)


@given(graph_and_order())
def test_seed_one_is_plain_greedy(case):
    g, order = case
    assert seeded_greedy(g, order, 1).colouring == greedy_colouring(g, order)


@given(graph_and_order(), st.integers(1, 5))
def test_seeds_above_n_are_indistinguishable(case, extra):
    g, order = case
    base = seeded_greedy(g, order, g.n + 1).colouring
    other = seeded_greedy(g, order, g.n + extra).colouring
    assert [base[v] for v in order[1:]] == [other[v] for v in order[1:]]


@given(graph_and_order())
def test_greedy_matches_reference(case):
    g, order = case
    c = greedy_colouring(g, order)
    assert c.to_list() == oracles.greedy(g, order)
    assert c.is_proper(g)


@settings(max_examples=50)
@given(graph_and_order(max_n=7))
def test_greedy_between_chi_and_n(case):
    g, order = case
    assert chromatic_number(g)[0] <= greedy_colouring(g, order).max_colour <= g.n


def test_connected_ordering_examples():
    fish = fx("fish")
    assert is_connected_ordering(fish, ids(fish, ["v1", "v2", "v3", "v4", "v5", "v6"]))
    p3 = named("ab bc")
    assert not is_connected_ordering(p3, [0, 2, 1])
    rng = random.Random(5)
    for _ in range(30):
        g = random_connected(rng, rng.randint(1, 10))
        for root in range(g.n):
            assert is_connected_ordering(g, bfs_order(g, root))


@given(graph_and_order())
def test_connected_ordering_matches_reference(case):
    g, order = case
    assert is_connected_ordering(g, order) == oracles.is_connected_order(g, order)


def test_ordering_from_colouring_examples():
    p3 = named("ab bc")
    order = ordering_from_colouring(p3, Colouring.of([1, 2, 1]))
    assert order == [0, 2, 1]
    assert [greedy_colouring(p3, order)[v] for v in order] == [1, 1, 2]
    fish = fx("fish")
    c = Colouring.of([1, 2, 3, 1, 3, 2])
    order = ordering_from_colouring(fish, c)
    assert order == ids(fish, ["v1", "v4", "v2", "v6", "v3", "v5"])
    assert greedy_colouring(fish, order).max_colour <= 3
    with pytest.raises(InvalidInputError):
        ordering_from_colouring(p3, Colouring.of([1, 1, 2]))


def test_optimal_colouring_gives_chi():
    rng = random.Random(8)
    for _ in range(40):
        g = random_connected(rng, rng.randint(1, 9))
        chi, c = chromatic_number(g)
        order = ordering_from_colouring(g, c)
        replay = greedy_colouring(g, order)
        assert replay.max_colour == chi
        assert all(replay[v] <= c[v] for v in range(g.n))


def test_extend_identity_when_h_is_everything():
    c4 = cycle(4)
    order = bfs_order(c4, 0)
    c = greedy_colouring(c4, order)
    assert extend_via_dominating(c4, c, range(4), order) == order


def test_extend_star():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    c = Colouring.of([1, 2, 2, 2])
    out = extend_via_dominating(star, c, [0, 1], [0, 1])
    assert out == [0, 1, 2, 3]
    assert greedy_colouring(star, out).max_colour == 2


def test_extend_precondition_errors():
    p4 = path(4)
    c = Colouring.of([1, 2, 1, 2])
    with pytest.raises(InvalidInputError, match="not dominating"):
        extend_via_dominating(p4, c, [0, 1], [0, 1])
    with pytest.raises(InvalidInputError, match="not connected"):
        extend_via_dominating(p4, c, [0, 2, 3], [0, 2, 3])
    with pytest.raises(InvalidInputError, match="not connected"):
        extend_via_dominating(p4, c, [0, 1, 2], [0, 2, 1])
    with pytest.raises(InvalidInputError, match="greedy disagrees"):
        extend_via_dominating(p4, Colouring.of([2, 1, 2, 1]), [1, 2], [2, 1])


def test_extend_random_dominating_subgraphs():
    """H = colours 1 and 2 of a First-Fit colouring along an optimal class order."""
    rng = random.Random(21)
    checked = 0
    for _ in range(200):
        g = random_connected(rng, rng.randint(2, 9))
        chi, opt = chromatic_number(g)
        c = greedy_colouring(g, ordering_from_colouring(g, opt))
        h = mask_of(v for v in range(g.n) if c[v] <= 2)
        if len(component_masks(g, h)) != 1:
            continue
        order_h = bfs_order(g, min(iter_bits(h)), within=h)
        try:
            out = extend_via_dominating(g, c, iter_bits(h), order_h)
        except InvalidInputError as exc:
            # BFS may colour H differently from c; that is the only acceptable refusal here
            assert "greedy disagrees" in str(exc)
            continue
        assert is_connected_ordering(g, out)
        assert greedy_colouring(g, out).max_colour == c.max_colour == chi
        checked += 1
    assert checked >= 20
