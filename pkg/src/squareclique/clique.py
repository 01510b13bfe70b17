"""Exact maximum clique by branch and bound with a greedy-colouring bound.

Vertex sets are Python ints used as bitsets. The search runs in two phases:

1. size: MCQ-style search with vertices indexed along a degeneracy order
   (highest core first), which pins down the clique number;
2. witness: a depth-first pass over labels in ascending order that stops at
   the first clique of that size. DFS visits sorted member tuples in
   lexicographic order, so the witness is the lexicographically smallest
   maximum clique regardless of how phase 1 found its clique.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BudgetExhausted, SizeError
from .graph import Graph

ORACLE_LIMIT = 20


@dataclass(frozen=True)
class CliqueResult:
    members: frozenset[int]
    size: int
    nodes_explored: int

    def to_json(self) -> dict:
        return {"size": self.size, "members": sorted(self.members),
                "nodes_explored": self.nodes_explored}


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _color_sort(p: int, adj: list[int]) -> tuple[list[int], list[int]]:
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    uncolored = p
    while uncolored:
        color += 1
        q = uncolored
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~adj[v]
            q ^= low
            uncolored ^= low
            order.append(v)
            bounds.append(color)
    return order, bounds


def _num_colors(p: int, adj: list[int]) -> int:
    color = 0
    while p:
        color += 1
        q = p
        while q:
            low = q & -q
            q &= ~adj[low.bit_length() - 1]
            q ^= low
            p ^= low
    return color


def _peel_order(g: Graph) -> list[int]:
    # Min-degree peeling; later vertices sit in denser cores.
    deg = {v: g.degree(v) for v in g.vertices}
    buckets: dict[int, set[int]] = {}
    for v, d in deg.items():
        buckets.setdefault(d, set()).add(v)
    out: list[int] = []
    removed: set[int] = set()
    d = 0
    while len(out) < len(deg):
        d = max(0, d - 1)
        while not buckets.get(d):
            d += 1
        v = min(buckets[d])
        buckets[d].discard(v)
        removed.add(v)
        out.append(v)
        for u in g.neighbors(v):
            if u not in removed:
                buckets[deg[u]].discard(u)
                deg[u] -= 1
                buckets.setdefault(deg[u], set()).add(u)
    return out


class _Search:
    def __init__(self, budget: int | None):
        self.budget = budget
        self.nodes = 0
        self.best_size = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExhausted(self.budget, self.best_size)


def _clique_number(adj: list[int], search: _Search) -> int:
    def expand(size: int, p: int) -> None:
        search.tick()
        order, bounds = _color_sort(p, adj)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= search.best_size:
                return
            v = order[i]
            newp = p & adj[v]
            if newp:
                expand(size + 1, newp)
            elif size + 1 > search.best_size:
                search.best_size = size + 1
            p &= ~(1 << v)

    n = len(adj)
    if n:
        expand(0, (1 << n) - 1)
    return search.best_size


def _first_clique_of_size(adj: list[int], target: int, search: _Search) -> list[int]:
    def find(chosen: list[int], p: int, need: int) -> list[int] | None:
        search.tick()
        if need == 0:
            return chosen
        if p.bit_count() < need or _num_colors(p, adj) < need:
            return None
        for v in _bits(p):
            above = p & ~((2 << v) - 1)
            res = find(chosen + [v], above & adj[v], need - 1)
            if res is not None:
                return res
            p &= ~(1 << v)
            if p.bit_count() < need:
                return None
        return None

    n = len(adj)
    res = find([], (1 << n) - 1, target)
    assert res is not None, "witness pass must find a clique of the known size"
    return res


def max_clique(g: Graph, node_budget: int | None = None) -> CliqueResult:
    """Maximum clique of ``g`` with the lexicographically smallest witness.

    Raises BudgetExhausted if more than ``node_budget`` search nodes are
    needed; a partial answer is never returned.
    """
    if len(g) == 0:
        return CliqueResult(frozenset(), 0, 0)
    search = _Search(node_budget)

    # phase 1: highest core first
    peel = _peel_order(g)[::-1]
    pos = {v: i for i, v in enumerate(peel)}
    adj = [sum(1 << pos[u] for u in g.neighbors(v)) for v in peel]
    omega = _clique_number(adj, search)

    # phase 2: ascending labels
    labels = sorted(g.vertices)
    idx = {v: i for i, v in enumerate(labels)}
    adj = [sum(1 << idx[u] for u in g.neighbors(v)) for v in labels]
    search.best_size = omega
    members = _first_clique_of_size(adj, omega, search)
    return CliqueResult(frozenset(labels[i] for i in members), omega, search.nodes)


def max_clique_oracle(g: Graph) -> CliqueResult:
    """Exhaustive check of all 2^n vertex subsets (n <= 20)."""
    n = len(g)
    if n > ORACLE_LIMIT:
        raise SizeError(f"max_clique_oracle limited to {ORACLE_LIMIT} vertices, got {n}")
    if n == 0:
        return CliqueResult(frozenset(), 0, 1)
    labels = sorted(g.vertices)
    idx = {v: i for i, v in enumerate(labels)}
    adj = [sum(1 << idx[u] for u in g.neighbors(v)) for v in labels]
    size = 1 << n
    ok = np.zeros(size, dtype=bool)
    ok[0] = True
    for i in range(n):
        lo = np.arange(1 << i, dtype=np.int64)
        ok[(1 << i):(2 << i)] = ok[: 1 << i] & ((lo & ~adj[i]) == 0)
    pop = np.bitwise_count(np.arange(size, dtype=np.int64))
    best = int(pop[ok].max())
    masks = np.nonzero(ok & (pop == best))[0]
    witness = min(tuple(labels[b] for b in range(n) if int(m) >> b & 1) for m in masks)
    return CliqueResult(frozenset(witness), best, size)
