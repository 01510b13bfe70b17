"""Distance-2 closure of a graph."""

from __future__ import annotations

from collections.abc import Iterable

from .graph import Graph


def square(g: Graph) -> Graph:
    """Same vertices; uv is an edge iff dist_g(u, v) <= 2."""
    adj = {}
    for v in g.vertices:
        nb = set(g.neighbors(v))
        for w in g.neighbors(v):
            nb |= g.neighbors(w)
        nb.discard(v)
        adj[v] = frozenset(nb)
    return Graph._from_adj(adj)


def square_neighbors(g: Graph, v: int) -> frozenset[int]:
    nb = set(g.neighbors(v))
    for w in g.neighbors(v):
        nb |= g.neighbors(w)
    nb.discard(v)
    return frozenset(nb)


def non_adjacent_pair_in_square(g: Graph, s: Iterable[int]) -> tuple[int, int] | None:
    """First pair (in sorted order) of ``s`` at distance > 2, or None."""
    members = sorted(g.check_subset(s))
    for i, v in enumerate(members):
        reach = square_neighbors(g, v)
        for u in members[i + 1:]:
            if u not in reach:
                return v, u
    return None


def is_clique_in_square(g: Graph, s: Iterable[int]) -> bool:
    return non_adjacent_pair_in_square(g, s) is None
