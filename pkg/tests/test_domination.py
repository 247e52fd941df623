import random
from itertools import combinations

import pytest

from kdom import Graph, complete, complete_bipartite, cycle, path, remove_matching, wheel
from kdom.domination import DominationResult, gamma3, gamma_k, is_k_dominating, is_k_tuple_dominating

from oracles import naive_min_dominating

G1 = Graph.from_edges(6, cycle(6).edges() + [(0, 3), (1, 4), (2, 5)])
G2 = Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (2, 5), (3, 5), (4, 5), (1, 4)])


def random_graph(n, rng, p=0.5):
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Checkers


def test_g1_claimed_witness():
    assert is_k_dominating(G1, {0, 2, 4}, 3)


def test_full_vertex_set_always_k_dominates():
    rng = random.Random(20)
    for _ in range(30):
        g = random_graph(rng.randint(1, 8), rng)
        assert is_k_dominating(g, range(g.n), rng.randint(1, 4))
        assert is_k_tuple_dominating(g, range(g.n), 1)


def test_c5_no_four_subset_3_dominates():
    c5 = cycle(5)
    for s in combinations(range(5), 4):
        assert not is_k_dominating(c5, s, 3)


def test_k_tuple_checker():
    for s in combinations(range(3), 2):
        assert is_k_tuple_dominating(complete(3), s, 2)
    assert not is_k_tuple_dominating(path(3), {0, 2}, 2)


def test_checker_input_validation():
    with pytest.raises(ValueError):
        is_k_dominating(path(3), {3}, 1)
    with pytest.raises(ValueError):
        is_k_dominating(path(3), {0}, 0)


# ---------------------------------------------------------------------------
# Exact solver against the published values


def test_gamma3_complete_graphs():
    for n in range(3, 9):
        assert gamma3(complete(n)).number == 3


def test_gamma3_paths_and_cycles_equal_n():
    for n in range(3, 9):
        assert gamma3(path(n)).number == n
        assert gamma3(cycle(n)).number == n


def test_gamma3_example_figures():
    assert gamma3(G1).number == 3
    assert gamma3(G2).number == 4
    # the claimed S2 = {v3,v4,v5,v6} is not actually 3-dominating
    assert not is_k_dominating(G2, {2, 3, 4, 5}, 3)
    assert gamma3(G2).witness == (1, 2, 3, 4)


def test_gamma3_matching_removals():
    assert gamma3(remove_matching(complete(6), [(0, 1), (2, 3), (4, 5)])).number == 4
    assert gamma3(remove_matching(complete(5), [(0, 1), (2, 3)])).number == 3
    assert gamma3(remove_matching(complete(8), [(0, 1), (2, 3), (4, 5), (6, 7)])).number == 4


def test_gamma3_assorted():
    assert gamma3(wheel(6)).number == 4
    res = gamma_k(complete_bipartite(2, 3), 3, "k-domination")
    assert res.number == 3 and res.witness == (2, 3, 4)
    paw = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    assert gamma3(paw).number == 3


def test_small_graphs_take_whole_vertex_set():
    assert gamma3(path(1)).number == 1
    assert gamma3(path(2)).number == 2


def test_infeasible_k_tuple():
    res = gamma_k(path(3), 3, "k-tuple")
    assert res == DominationResult(None, None, "k-tuple", 3, feasible=False)
    assert gamma_k(path(1), 2, "k-tuple").feasible is False


def test_variant_is_mandatory_and_validated():
    with pytest.raises(ValueError):
        gamma_k(path(3), 1, "domination")
    with pytest.raises(TypeError):
        gamma_k(path(3), 1)
    with pytest.raises(ValueError):
        gamma_k(Graph(0, ()), 1, "k-domination")


# ---------------------------------------------------------------------------
# Properties


def test_monotone_in_k():
    rng = random.Random(21)
    for _ in range(40):
        g = random_graph(rng.randint(1, 7), rng, p=rng.random())
        for variant in ("k-domination", "k-tuple"):
            prev = None
            for k in (1, 2, 3):
                res = gamma_k(g, k, variant)
                if not res.feasible:
                    prev = None
                    continue
                if prev is not None:
                    assert prev <= res.number
                prev = res.number


def test_witnesses_pass_their_checker():
    rng = random.Random(22)
    for _ in range(60):
        g = random_graph(rng.randint(1, 8), rng, p=rng.random())
        for k in (1, 2, 3):
            res = gamma_k(g, k, "k-domination")
            assert is_k_dominating(g, res.witness, k)
            assert len(res.witness) == res.number
            tup = gamma_k(g, k, "k-tuple")
            if tup.feasible:
                assert is_k_tuple_dominating(g, tup.witness, k)


def test_oracle_equivalence_random():
    rng = random.Random(23)
    for _ in range(50):
        g = random_graph(rng.randint(1, 6), rng, p=rng.random())
        for k in (1, 2, 3):
            for variant in ("k-domination", "k-tuple"):
                res = gamma_k(g, k, variant)
                expect = naive_min_dominating(g, k, variant)
                if expect is None:
                    assert not res.feasible
                else:
                    assert (res.number, res.witness) == expect
