"""Canonical forms and isomorphism tests for graphs up to 14 vertices.

The canonical form of a graph is the lexicographically smallest graph6
string over all vertex permutations.  It is found by placing vertices one
position at a time: after placing position j we know the whole j-th
column of the upper triangle, so a running best-known column sequence
prunes the placement tree (branch and bound with candidates ordered by
their column bits).  Complete and edgeless graphs short-circuit, since
every permutation ties.  Simple and auditable by brute force, which is
the point; practical partition-refinement tools are out of scope.
"""

from dataclasses import dataclass

from .graphs import Graph, graph6_encode

MAX_CANON_VERTICES = 14

_SENTINEL = 1 << 62


@dataclass(frozen=True)
class CanonicalForm:
    """canon_graph6 plus the relabeling input vertex -> canonical position."""

    canon_graph6: str
    relabeling: tuple


def _lex_min_placement(n, adj):
    """Return perm with perm[position] = input vertex minimizing the bit string."""
    best_cols = [_SENTINEL] * n
    best_perm = None
    perm = [0] * n

    def dfs(depth, remaining, acc):
        # acc[u] = column bits of u against the placed prefix
        nonlocal best_perm
        cands = []  # sort keys pack (column << 4) | vertex; n <= 14 keeps vertices 4-bit
        m = remaining
        while m:
            low = m & -m
            u = low.bit_length() - 1
            cands.append((acc[u] << 4) | u)
            m ^= low
        cands.sort()
        last = depth + 1 == n
        for key in cands:
            col = key >> 4
            if col > best_cols[depth]:
                break
            if col < best_cols[depth]:
                best_cols[depth] = col
                for t in range(depth + 1, n):
                    best_cols[t] = _SENTINEL
                best_perm = None
            u = key & 15
            perm[depth] = u
            if last:
                if best_perm is None:
                    best_perm = perm.copy()
            else:
                rem = remaining & ~(1 << u)
                au = adj[u]
                acc2 = acc.copy()
                m = rem
                while m:
                    low = m & -m
                    v = low.bit_length() - 1
                    acc2[v] = (acc2[v] << 1) | ((au >> v) & 1)
                    m ^= low
                dfs(depth + 1, rem, acc2)

    dfs(0, (1 << n) - 1, [0] * n)
    return best_perm


def _apply_relabeling(g, relabeling):
    rows = [0] * g.n
    for v in range(g.n):
        row = 0
        m = g.adj[v]
        while m:
            low = m & -m
            row |= 1 << relabeling[low.bit_length() - 1]
            m ^= low
        rows[relabeling[v]] = row
    return Graph(g.n, rows)


def canonical_form(g):
    """Canonical form of g; guard: n <= 14."""
    n = g.n
    if n > MAX_CANON_VERTICES:
        raise ValueError(f"canonical_form guard exceeded: n={n} > {MAX_CANON_VERTICES}")
    if n <= 1:
        return CanonicalForm(graph6_encode(g), tuple(range(n)))
    m = g.edge_count()
    if m == 0 or m == n * (n - 1) // 2:
        # every permutation gives the same string
        return CanonicalForm(graph6_encode(g), tuple(range(n)))
    perm = _lex_min_placement(n, g.adj)
    relabeling = [0] * n
    for pos, v in enumerate(perm):
        relabeling[v] = pos
    relabeling = tuple(relabeling)
    return CanonicalForm(graph6_encode(_apply_relabeling(g, relabeling)), relabeling)


def canonical_graph6(g):
    return canonical_form(g).canon_graph6


def is_isomorphic(g, h):
    """Canonical-string equality, after cheap rejections on order, size, degrees."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(row.bit_count() for row in g.adj) != sorted(row.bit_count() for row in h.adj):
        return False
    return canonical_graph6(g) == canonical_graph6(h)
