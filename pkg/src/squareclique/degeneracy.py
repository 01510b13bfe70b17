"""Degeneracy orders and exact maximum average degree."""

from __future__ import annotations

import heapq
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, maximum_flow

from .errors import DomainError, SizeError
from .graph import Graph, VertexOrder

MAD_ORACLE_LIMIT = 15


@dataclass(frozen=True)
class DegeneracyCertificate:
    order: VertexOrder
    k: int
    max_later_degree: int


@dataclass(frozen=True)
class Density:
    """``numerator / denominator`` = ``2|E(H)| / |V(H)|`` for the witness set H."""

    numerator: int
    denominator: int
    witness: frozenset[int]

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        v = self.value
        return f"{v.numerator}/{v.denominator}"

    def to_json(self) -> dict:
        return {"value": str(self), "witness": sorted(self.witness)}


def degeneracy_order(g: Graph, k: int, avoid: Iterable[int] = ()) -> DegeneracyCertificate | None:
    """Peel vertices of current degree <= k; return None if the graph is not k-degenerate.

    Eligible vertices outside ``avoid`` are always peeled before eligible vertices
    inside it, so ``avoid`` members land as late as this greedy can manage.
    Remaining ties go to smaller current degree, then smaller label.
    """
    if k < 0:
        raise DomainError("k must be non-negative")
    avoid = frozenset(avoid)
    deg = {v: g.degree(v) for v in g.vertices}
    heaps: tuple[list, list] = ([], [])
    for v, d in deg.items():
        heapq.heappush(heaps[v in avoid], (d, v))
    removed: set[int] = set()
    seq: list[int] = []

    def top(h):
        while h and (h[0][1] in removed or h[0][0] != deg[h[0][1]]):
            heapq.heappop(h)
        return h[0] if h else None

    while len(seq) < len(deg):
        pick = None
        for h in heaps:
            t = top(h)
            if t is not None and t[0] <= k:
                pick = t
                heapq.heappop(h)
                break
        if pick is None:
            return None
        v = pick[1]
        removed.add(v)
        seq.append(v)
        for u in g.neighbors(v):
            if u not in removed:
                deg[u] -= 1
                heapq.heappush(heaps[u in avoid], (deg[u], u))
    order = VertexOrder(seq)
    _, worst = verify_order(g, order, k)
    return DegeneracyCertificate(order, k, worst)


def verify_order(g: Graph, order: VertexOrder, k: int) -> tuple[bool, int]:
    """Check every vertex has at most k neighbours later in ``order``."""
    order.check_permutation_of(g)
    pos = order.position
    worst = 0
    for v in order:
        p = pos(v)
        later = sum(1 for u in g.neighbors(v) if pos(u) > p)
        worst = max(worst, later)
    return worst <= k, worst


def degeneracy(g: Graph) -> int:
    if len(g) == 0:
        raise DomainError("degeneracy of the empty graph is undefined")
    deg = {v: g.degree(v) for v in g.vertices}
    heap = [(d, v) for v, d in deg.items()]
    heapq.heapify(heap)
    removed: set[int] = set()
    best = 0
    while heap:
        d, v = heapq.heappop(heap)
        if v in removed or d != deg[v]:
            continue
        best = max(best, d)
        removed.add(v)
        for u in g.neighbors(v):
            if u not in removed:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return best


def _density_of(g: Graph, s: frozenset[int]) -> Density:
    e = sum(1 for v in s for u in g.neighbors(v) if u in s) // 2
    return Density(2 * e, len(s), s)


def _denser_subset(g: Graph, idx: dict[int, int], labels: list[int], p: int, q: int) -> frozenset[int]:
    # Min cut of Goldberg's network scaled by q. The source side S of a minimum
    # cut maximises 2q|E(S)| - p|S|, so it is non-empty iff some subgraph beats p/q.
    n = len(labels)
    m = g.num_edges
    s, t = n, n + 1
    rows, cols, caps = [], [], []
    for v in labels:
        i = idx[v]
        rows += [s, i]
        cols += [i, t]
        caps += [q * m, q * m + p - q * g.degree(v)]
        for u in g.neighbors(v):
            rows.append(i)
            cols.append(idx[u])
            caps.append(q)
    cap = csr_matrix((np.array(caps, dtype=np.int64), (rows, cols)), shape=(n + 2, n + 2))
    cap.sum_duplicates()
    if cap.data.size and cap.data.max() >= 2**31:
        raise SizeError("graph too large for 32-bit flow capacities")
    cap = cap.astype(np.int32)
    flow = maximum_flow(cap, s, t, method="dinic").flow
    residual = (cap - flow).tocsr()
    residual.data[residual.data < 0] = 0
    residual.eliminate_zeros()
    reach = breadth_first_order(residual, s, directed=True, return_predecessors=False)
    return frozenset(labels[i] for i in reach if i < n)


def mad(g: Graph) -> Density:
    """Exact maximum average degree with a witness vertex set.

    Starts from the whole graph and repeatedly asks a min-cut oracle for a
    strictly denser subgraph; densities only increase and take finitely many
    rational values, so the loop ends at the maximum.
    """
    if len(g) == 0:
        raise DomainError("mad of the empty graph is undefined")
    labels = sorted(g.vertices)
    idx = {v: i for i, v in enumerate(labels)}
    best = _density_of(g, frozenset(labels))
    if g.num_edges == 0:
        return Density(0, 1, frozenset(labels[:1]))
    while True:
        val = best.value
        better = _denser_subset(g, idx, labels, val.numerator, val.denominator)
        if not better:
            return best
        cand = _density_of(g, better)
        if cand.value <= val:
            return best
        best = cand


def mad_oracle(g: Graph) -> Density:
    """Exhaustive maximum of 2|E(H)|/|V(H)| over all non-empty vertex subsets."""
    n = len(g)
    if n == 0:
        raise DomainError("mad of the empty graph is undefined")
    if n > MAD_ORACLE_LIMIT:
        raise SizeError(f"mad_oracle limited to {MAD_ORACLE_LIMIT} vertices, got {n}")
    labels = sorted(g.vertices)
    idx = {v: i for i, v in enumerate(labels)}
    adj = [sum(1 << idx[u] for u in g.neighbors(v)) for v in labels]
    size = 1 << n
    ecount = np.zeros(size, dtype=np.int64)
    for i in range(n):
        lo = np.arange(1 << i, dtype=np.int64)
        ecount[(1 << i):(2 << i)] = ecount[: 1 << i] + np.bitwise_count(lo & adj[i])
    pop = np.bitwise_count(np.arange(size, dtype=np.int64))
    best: Density | None = None
    for k in range(1, n + 1):
        masks = np.nonzero(pop == k)[0]
        j = masks[np.argmax(ecount[masks])]
        cand = Density(2 * int(ecount[j]), k, frozenset(labels[b] for b in range(n) if j >> b & 1))
        if best is None or cand.value > best.value:
            best = cand
    return best
