import random
from itertools import combinations

import pytest

from kdom import (
    Graph,
    attach_pendant_paths,
    complement,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    format_edge_list,
    friendship,
    graph6_decode,
    graph6_encode,
    greedy_matching,
    induced_subgraph,
    is_connected,
    join,
    max_degree,
    min_degree,
    parse_edge_list,
    path,
    remove_matching,
    star,
    wheel,
)


def random_graph(n, rng, p=0.5):
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Graph invariants and validation


def test_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))


def test_rejects_loops_and_out_of_range_bits():
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0b01))
    with pytest.raises(ValueError):
        Graph(2, (0b100, 0b000))
    with pytest.raises(ValueError):
        Graph(63, tuple(0 for _ in range(63)))


def test_constructors_validate(on_sizes=(1, 2, 3, 5, 8)):
    rng = random.Random(0)
    for n in on_sizes:
        g = random_graph(n, rng)
        for v in range(n):
            assert not g.has_edge(v, v)
            for u in g.neighbors(v):
                assert g.has_edge(u, v)


# ---------------------------------------------------------------------------
# Families


def test_path():
    assert path(1).edges() == []
    p4 = path(4)
    assert p4.edges() == [(0, 1), (1, 2), (2, 3)]
    assert min_degree(p4) == 1 and max_degree(p4) == 2
    with pytest.raises(ValueError):
        path(0)


def test_cycle():
    assert cycle(3) == complete(3)
    c6 = cycle(6)
    assert c6.edge_count() == 6
    assert all(c6.degree(v) == 2 for v in range(6))
    with pytest.raises(ValueError):
        cycle(2)


def test_complete_and_bipartite():
    assert complete(4).edge_count() == 6
    k23 = complete_bipartite(2, 3)
    assert sorted(k23.degree(v) for v in range(5)) == [2, 2, 2, 3, 3]
    assert star(3).edge_count() == 3
    assert min_degree(star(3)) == 1


def test_wheel():
    assert wheel(4) == Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])
    w5 = wheel(5)
    assert w5.degree(4) == 4
    assert all(w5.degree(v) == 3 for v in range(4))
    with pytest.raises(ValueError):
        wheel(3)


def test_friendship():
    assert friendship(1).edge_count() == 3
    f2 = friendship(2)
    assert f2.n == 5 and f2.degree(0) == 4
    assert all(f2.degree(v) == 2 for v in range(1, 5))
    with pytest.raises(ValueError):
        friendship(0)


def test_complement_involution():
    rng = random.Random(1)
    assert complement(complete(5)).edge_count() == 0
    for n in (1, 4, 7, 10):
        g = random_graph(n, rng)
        assert complement(complement(g)) == g


def test_union_and_join():
    rng = random.Random(2)
    assert not is_connected(disjoint_union(complete(3), complete(3)))
    for _ in range(20):
        g = random_graph(rng.randint(1, 6), rng)
        h = random_graph(rng.randint(1, 6), rng)
        j = join(g, h)
        assert j.edge_count() == g.edge_count() + h.edge_count() + g.n * h.n
    with pytest.raises(ValueError):
        disjoint_union(complete(40), complete(40))


def test_join_single_vertex_to_path():
    k1p4 = join(complete(1), path(4))
    assert k1p4.n == 5
    assert k1p4.degree(0) == 4


def test_h2_via_complement_of_union():
    h2 = complement(disjoint_union(path(3), path(2)))
    assert h2.n == 5 and h2.edge_count() == 7


def test_remove_matching():
    octa = remove_matching(complete(6), [(0, 1), (2, 3), (4, 5)])
    assert all(octa.degree(v) == 4 for v in range(6))
    assert remove_matching(complete(4), []) == complete(4)
    with pytest.raises(ValueError):
        remove_matching(complete(4), [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        remove_matching(path(3), [(0, 2)])


def test_greedy_matching():
    assert greedy_matching(complete(6), "perfect") == [(0, 1), (2, 3), (4, 5)]
    assert greedy_matching(complete(5), 2) == [(0, 1), (2, 3)]
    with pytest.raises(ValueError):
        greedy_matching(complete(5), "perfect")


def test_attach_pendant_paths():
    g = attach_pendant_paths(cycle(4), [(0, 1, 2), (1, 2, 3), (2, 1, 4), (3, 1, 3)])
    assert g.n == 4 + 1 + 2 * 2 + 3 + 2  # the worked 14-vertex example
    paw = attach_pendant_paths(cycle(3), [(0, 1, 2)])
    assert sorted(paw.degree(v) for v in range(4)) == [1, 2, 2, 3]
    spider = attach_pendant_paths(path(3), [(1, 1, 3)])
    assert spider.n == 5 and spider.degree(1) == 3
    with pytest.raises(ValueError):
        attach_pendant_paths(cycle(3), [(0, 1, 1)])
    with pytest.raises(ValueError):
        attach_pendant_paths(cycle(3), [(5, 1, 2)])


def test_attach_vertex_count_formula():
    rng = random.Random(3)
    for _ in range(25):
        base = random_graph(rng.randint(1, 5), rng)
        specs = []
        for v in range(base.n):
            if rng.random() < 0.5:
                specs.append((v, rng.randint(1, 2), rng.randint(2, 4)))
        if not specs:
            continue
        g = attach_pendant_paths(base, specs)
        assert g.n == base.n + sum(m * (l - 1) for _, m, l in specs)
        for v, m, _ in specs:
            assert g.degree(v) == base.degree(v) + m


def test_is_connected():
    assert is_connected(Graph(0, ()))
    assert is_connected(path(1))
    assert is_connected(path(9))
    assert not is_connected(Graph.from_edges(3, [(0, 1)]))


def test_induced_subgraph():
    g = cycle(5)
    sub = induced_subgraph(g, [0, 1, 2])
    assert sub.edges() == [(0, 1), (1, 2)]


# ---------------------------------------------------------------------------
# graph6


def test_graph6_known_values():
    assert graph6_encode(Graph.from_edges(2, [(0, 1)])) == "A_"
    assert graph6_encode(complete(4)) == "C~"
    assert graph6_decode("A_") == Graph.from_edges(2, [(0, 1)])
    assert graph6_decode("C~") == complete(4)
    assert graph6_encode(Graph(0, ())) == "?"
    assert graph6_decode("@") == Graph(1, (0,))


def test_graph6_round_trip_random():
    rng = random.Random(4)
    for _ in range(1000):
        g = random_graph(rng.randint(0, 12), rng, p=rng.random())
        assert graph6_decode(graph6_encode(g)) == g


def test_graph6_malformed():
    with pytest.raises(ValueError):
        graph6_decode("")
    with pytest.raises(ValueError):
        graph6_decode("~??")  # multi-byte size form
    with pytest.raises(ValueError):
        graph6_decode("C")  # truncated body
    with pytest.raises(ValueError):
        graph6_decode("C~~")  # overlong body
    with pytest.raises(ValueError):
        graph6_decode("B" + chr(40))  # byte below 63
    with pytest.raises(ValueError):
        graph6_decode("A" + chr(63 + 1))  # nonzero padding bits


# ---------------------------------------------------------------------------
# Edge-list text format


def test_edge_list_round_trip():
    g = wheel(6)
    assert parse_edge_list(format_edge_list(g)) == g
    assert parse_edge_list("2\n0 1\n") == Graph.from_edges(2, [(0, 1)])
    with pytest.raises(ValueError):
        parse_edge_list("")
    with pytest.raises(ValueError):
        parse_edge_list("x\n")
    with pytest.raises(ValueError):
        parse_edge_list("2\n0 1 2\n")
