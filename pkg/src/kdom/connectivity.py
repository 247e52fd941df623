"""Exact vertex connectivity with a minimum vertex-cut certificate.

kappa is computed through Menger's theorem: for each non-adjacent pair
(u, v) in lexicographic order, the maximum number of internally
vertex-disjoint u-v paths equals the max flow on the vertex-split digraph
(v_in -> v_out of capacity 1, infinite for the endpoints; each edge gives
infinite arcs both ways).  The first pair attaining the minimum supplies
the cut: split arcs saturated on the residual reachability boundary.
Complete graphs are n-1 by convention, disconnected input is 0.
"""

from dataclasses import dataclass
from itertools import combinations

from .graphs import induced_subgraph, is_connected, iter_bits


@dataclass(frozen=True)
class CutResult:
    """kappa with a certifying cut; separated is a vertex pair the cut
    disconnects (None for complete graphs, where no cut exists)."""

    kappa: int
    cut: tuple
    separated: tuple | None


def _max_flow_vertex_cut(g, s, t, stop_at):
    """Max vertex-disjoint s-t paths; returns (value, cut or None).

    Aborts with cut=None once value reaches stop_at (caller only cares
    about strictly smaller values).  Node 2v is v_in, 2v+1 is v_out.
    """
    n = g.n
    inf = n + 1
    heads = []
    caps = []
    arcs = [[] for _ in range(2 * n)]

    def add_arc(a, b, cap):
        arcs[a].append(len(heads))
        heads.append(b)
        caps.append(cap)
        arcs[b].append(len(heads))
        heads.append(a)
        caps.append(0)

    for v in range(n):
        add_arc(2 * v, 2 * v + 1, inf if v in (s, t) else 1)
    for u, v in g.edges():
        add_arc(2 * u + 1, 2 * v, inf)
        add_arc(2 * v + 1, 2 * u, inf)

    source, sink = 2 * s + 1, 2 * t
    value = 0
    while True:
        if stop_at is not None and value >= stop_at:
            return value, None
        # BFS for an augmenting path in the residual graph
        parent_arc = [-1] * (2 * n)
        parent_arc[source] = -2
        queue = [source]
        while queue and parent_arc[sink] == -1:
            nxt = []
            for a in queue:
                for ai in arcs[a]:
                    b = heads[ai]
                    if caps[ai] > 0 and parent_arc[b] == -1:
                        parent_arc[b] = ai
                        nxt.append(b)
            queue = nxt
        if parent_arc[sink] == -1:
            break
        # bottleneck is 1: every s-t path crosses a unit split arc
        node = sink
        while node != source:
            ai = parent_arc[node]
            caps[ai] -= 1
            caps[ai ^ 1] += 1
            node = heads[ai ^ 1]
        value += 1

    # residual reachability from the source gives the cut
    reach = [False] * (2 * n)
    reach[source] = True
    stack = [source]
    while stack:
        a = stack.pop()
        for ai in arcs[a]:
            b = heads[ai]
            if caps[ai] > 0 and not reach[b]:
                reach[b] = True
                stack.append(b)
    cut = tuple(v for v in range(n) if v not in (s, t) and reach[2 * v] and not reach[2 * v + 1])
    return value, cut


def vertex_connectivity(g):
    """Exact kappa(g) with a certifying minimum vertex cut."""
    n = g.n
    if n == 0:
        return CutResult(0, (), None)
    if not is_connected(g):
        comp = 1
        frontier = 1
        while frontier:
            acc = 0
            for v in iter_bits(frontier):
                acc |= g.adj[v]
            frontier = acc & ~comp
            comp |= frontier
        other = next(v for v in range(n) if not (comp >> v) & 1)
        return CutResult(0, (), (0, other))
    if g.edge_count() == n * (n - 1) // 2:
        return CutResult(n - 1, (), None)
    best = None
    for u, v in combinations(range(n), 2):
        if g.has_edge(u, v):
            continue
        stop = best.kappa if best is not None else None
        value, cut = _max_flow_vertex_cut(g, u, v, stop)
        if best is None or value < best.kappa:
            best = CutResult(value, cut, (u, v))
    return best


def brute_force_connectivity(g):
    """Smallest removal set size that disconnects g, or n-1 when none does.

    Independent oracle for the flow route; guarded at n <= 12.
    """
    n = g.n
    if n > 12:
        raise ValueError(f"brute_force_connectivity guard exceeded: n={n} > 12")
    full = set(range(n))
    for size in range(0, max(n - 1, 0)):
        for removal in combinations(range(n), size):
            rest = full - set(removal)
            if len(rest) >= 2 and not is_connected(induced_subgraph(g, rest)):
                return size
    return max(n - 1, 0)
