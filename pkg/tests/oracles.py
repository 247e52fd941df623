"""Independent brute-force oracles used to certify the solvers.

These deliberately avoid the library's bitmask internals: set arithmetic,
full subset scans, and permutation scans only, so they stay independent of
the code paths they check.
"""

from itertools import combinations, permutations

from kdom import Graph, graph6_encode


def neighbor_sets(g):
    return [set(g.neighbors(v)) for v in range(g.n)]


def naive_min_dominating(g, k, variant):
    """Scan all 2^n subsets; return (size, vertices) of the minimum-mask
    optimum, or None when no subset works."""
    n = g.n
    nbrs = neighbor_sets(g)
    best = None
    for mask in range(1 << n):
        s = {v for v in range(n) if (mask >> v) & 1}
        if variant == "k-domination":
            ok = all(len(nbrs[v] & s) >= k for v in range(n) if v not in s)
        else:
            ok = all(len((nbrs[v] | {v}) & s) >= k for v in range(n))
        if ok:
            key = (len(s), mask)
            if best is None or key < best[0]:
                best = (key, tuple(sorted(s)))
    if best is None:
        return None
    return best[0][0], best[1]


def brute_min_graph6(g):
    """Minimum graph6 string over every vertex permutation."""
    edges = g.edges()
    return min(
        graph6_encode(Graph.from_edges(g.n, [(p[u], p[v]) for u, v in edges]))
        for p in permutations(range(g.n))
    )


def connected_by_sets(n, edge_set):
    """Connectivity via plain set BFS over an explicit edge set."""
    if n <= 1:
        return True
    adj = {v: set() for v in range(n)}
    for u, v in edge_set:
        adj[u].add(v)
        adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def labeled_connected_canonical(n, canon):
    """Canonical strings of every connected labeled graph on n vertices.

    canon: function Graph -> canonical graph6 string.  The generation route
    (all 2^C(n,2) labeled graphs, connectivity filter, dedup) is independent
    of the extension-based enumerator it cross-checks.
    """
    pairs = list(combinations(range(n), 2))
    out = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        if not connected_by_sets(n, edges):
            continue
        out.add(canon(Graph.from_edges(n, edges)))
    return out
