"""Isomorph-free streams of connected graphs, one level per vertex count.

Level n is generated by extension: every connected representative on n-1
vertices gains a new vertex adjacent to each nonempty subset of the old
ones, children are canonicalized, and the whole level is deduplicated by
canonical string.  Completeness rests on every connected graph having a
non-cut vertex; attaching to a nonempty subset keeps intermediates
connected, so no filter is needed beyond the single-vertex base case.
Levels are sorted by canonical graph6 and cached, so emission order is
deterministic and repeat calls are free within a process.

Guards: n <= 8 by default, allow_large=True lifts it to the hard ceiling
(env KDOM_MAX_N, default 9).
"""

import os

from .graphs import Graph, graph6_decode
from .isomorphism import canonical_form

DEFAULT_GUARD = 8
DEFAULT_CEILING = 9

_levels: dict[int, tuple] = {}


def _hard_ceiling():
    raw = os.environ.get("KDOM_MAX_N")
    if raw is None:
        return DEFAULT_CEILING
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"KDOM_MAX_N must be an integer, got {raw!r}") from None


def _extend_level(parents, m):
    seen = set()
    new = m - 1
    for parent in parents:
        base = parent.adj
        for sub in range(1, 1 << new):
            rows = [
                base[v] | (1 << new) if (sub >> v) & 1 else base[v] for v in range(new)
            ]
            rows.append(sub)
            seen.add(canonical_form(Graph(m, rows)).canon_graph6)
    return tuple(graph6_decode(s) for s in sorted(seen))


def connected_graphs(n, allow_large=False):
    """All connected graphs on n vertices, one canonical representative each.

    Returns a tuple of graphs whose labeling is canonical, ordered by
    ascending canonical graph6 string.
    """
    if n < 1:
        raise ValueError("connected_graphs requires n >= 1")
    ceiling = _hard_ceiling()
    if n > ceiling:
        raise ValueError(f"n={n} exceeds the hard ceiling KDOM_MAX_N={ceiling}")
    if n > DEFAULT_GUARD and not allow_large:
        raise ValueError(
            f"n={n} exceeds the default guard {DEFAULT_GUARD}; pass allow_large=True"
        )
    if 1 not in _levels:
        _levels[1] = (Graph(1, (0,)),)
    for m in range(2, n + 1):
        if m not in _levels:
            _levels[m] = _extend_level(_levels[m - 1], m)
    return _levels[n]
