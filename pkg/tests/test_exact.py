import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from congreedy.errors import BudgetExhausted, InvalidInputError
from congreedy.exact import (
    SearchBudget,
    chromatic_number,
    clique_number,
    constrained_optimal_colouring,
    edge_in_k_clique,
    find_long_odd_hole,
    is_perfect_small,
    k_colouring,
    maximum_clique,
)
from congreedy.generators import complete, cycle, knn_minus_matching, random_connected, random_connected_bipartite
from congreedy.graph import Graph, complement, induced_subgraph
from helpers import fx, ids, named


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_clique_number_examples():
    assert clique_number(complete(4)) == 4
    assert clique_number(cycle(5)) == 2
    assert clique_number(fx("fish")) == 3


@given(graphs())
def test_clique_number_brute_force(g):
    assert clique_number(g) == oracles.omega(g)
    clique = maximum_clique(g)
    assert len(clique) == clique_number(g)
    assert all(g.has_edge(a, b) for a, b in itertools.combinations(clique, 2))


def test_chromatic_number_examples():
    assert chromatic_number(fx("fish"))[0] == 3
    assert chromatic_number(fx("ugly-cubic"))[0] == 3
    for n in range(2, 8):
        assert chromatic_number(knn_minus_matching(n))[0] == 2
    assert chromatic_number(Graph(0, frozenset()))[0] == 0
    assert chromatic_number(cycle(7))[0] == 3


@settings(max_examples=80)
@given(graphs())
def test_chromatic_number_is_exact(g):
    chi, c = chromatic_number(g)
    assert chi == oracles.chi(g)
    assert c.is_proper(g) and c.max_colour == chi


def test_k_colouring_examples():
    k2 = named("ab")
    c = k_colouring(k2, 2, [(0, 2)])
    assert c.to_list() == [1, 2]
    assert k_colouring(k2, 1) is None
    c5 = cycle(5)
    for v in range(5):
        c = k_colouring(c5, 3, [(v, 3)])
        assert c is not None and c.is_proper(c5) and c[v] != 3


def test_k_colouring_constraints_brute_force():
    rng = random.Random(4)
    for _ in range(150):
        g = random_connected(rng, rng.randint(1, 7), 0.5)
        k = rng.randint(1, 4)
        constraint = [(rng.randrange(g.n), rng.randint(1, k)) for _ in range(rng.randint(0, 3))]
        got = k_colouring(g, k, constraint)
        nb = oracles.nbrs(g)
        feasible = any(
            all(col[u] != col[w] for u in range(g.n) for w in nb[u])
            and all(col[v] != c for v, c in constraint)
            for col in itertools.product(range(1, k + 1), repeat=g.n)
        )
        assert (got is not None) == feasible
        if got is not None:
            assert got.is_proper(g) and got.max_colour <= k
            assert all(got[v] != c for v, c in constraint)


def test_constrained_optimal_colouring_at_chi_always_succeeds():
    rng = random.Random(6)
    for _ in range(60):
        g = random_connected(rng, rng.randint(1, 9))
        chi, _ = chromatic_number(g)
        assert constrained_optimal_colouring(g, chi) is not None
    with pytest.raises(InvalidInputError):
        constrained_optimal_colouring(complete(2), 0)


def test_no_colouring_below_chi():
    rng = random.Random(9)
    for _ in range(40):
        g = random_connected(rng, rng.randint(2, 8), 0.5)
        chi, _ = chromatic_number(g)
        assert not oracles.colourable(g, chi - 1)


def test_edge_in_clique_examples():
    k3 = complete(3)
    assert edge_in_k_clique(k3, 0, 1, 3)
    assert not edge_in_k_clique(k3, 0, 1, 4)
    fish = fx("fish")
    v3, v6 = ids(fish, ["v3", "v6"])
    assert edge_in_k_clique(fish, v3, v6, 3)
    with pytest.raises(InvalidInputError):
        edge_in_k_clique(fish, *ids(fish, ["v1", "v6"]), 3)


def test_edge_in_clique_brute_force():
    rng = random.Random(12)
    for _ in range(60):
        g = random_connected(rng, rng.randint(2, 8), 0.55)
        for u, v in g.sorted_edges():
            for k in range(2, 6):
                assert edge_in_k_clique(g, u, v, k) == oracles.edge_in_clique(g, u, v, k)


def test_perfection_examples():
    assert not is_perfect_small(cycle(5))
    assert is_perfect_small(fx("fish"))
    assert not is_perfect_small(complement(cycle(7)))
    assert is_perfect_small(cycle(6))
    rng = random.Random(2)
    for _ in range(30):
        assert is_perfect_small(random_connected_bipartite(rng, rng.randint(2, 14)))


def test_odd_hole_is_induced_and_odd():
    for n in (5, 7, 9):
        hole = find_long_odd_hole(cycle(n))
        assert hole is not None and len(hole) == n
    g = cycle(7)
    g = Graph.from_edges(8, list(g.edges) + [(0, 7), (3, 7)])
    hole = find_long_odd_hole(g)
    assert hole is not None and len(hole) % 2 == 1 and len(hole) >= 5
    sub, _ = induced_subgraph(g, hole)
    assert sub.m == len(hole) and all(sub.degree(v) == 2 for v in range(sub.n))


def test_perfection_matches_definition():
    for g in oracles.atlas_connected(6):
        assert is_perfect_small(g) == oracles.is_perfect(g), g.sorted_edges()
    rng = random.Random(17)
    for _ in range(12):
        g = random_connected(rng, rng.randint(7, 8), 0.45)
        assert is_perfect_small(g) == oracles.is_perfect(g), g.sorted_edges()


def test_omega_equals_chi_on_induced_subgraphs_of_perfect_graphs():
    rng = random.Random(23)
    seen = 0
    while seen < 8:
        g = random_connected(rng, 9, 0.4)
        if not is_perfect_small(g):
            continue
        seen += 1
        for r in range(1, g.n + 1):
            for s in itertools.combinations(range(g.n), r):
                sub = induced_subgraph(g, s)[0]
                assert clique_number(sub) == chromatic_number(sub)[0]


def test_budget_exhaustion_is_an_error():
    g = complement(cycle(13))
    with pytest.raises(BudgetExhausted):
        chromatic_number(g, SearchBudget(max_nodes=5))
    with pytest.raises(InvalidInputError):
        SearchBudget(max_nodes=0)
    assert isinstance(chromatic_number(g, SearchBudget(max_millis=60_000))[0], int)
