"""Tight 2-degenerate instances and random 2-degenerate test graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import ParameterError
from .graph import Graph

HUBS = (0, 1, 2, 3, 4)
K5_EDGES = tuple(combinations(HUBS, 2))

# Hub pairs (0-based u1..u5) whose K_{2,*} gadget is enlarged, per residue D mod 4.
_PLUS_ONE = {
    0: (),
    1: ((0, 1), (2, 3)),
    2: ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4)),
    3: ((1, 2), (3, 4), (0, 4)),
}
_PLUS_TWO = {0: (), 1: (), 2: (), 3: ((0, 1), (2, 3))}


@dataclass(frozen=True)
class TightInstance:
    graph: Graph
    hubs: tuple[int, ...]
    clique_witness: frozenset[int]
    d: int
    k: int
    r: int
    blocks: dict[tuple[int, int], tuple[int, ...]]

    def to_json(self) -> dict:
        return {
            "d": self.d, "k": self.k, "r": self.r,
            "hubs": list(self.hubs),
            "clique_witness": sorted(self.clique_witness),
            "blocks": {f"{a}-{b}": list(vs) for (a, b), vs in self.blocks.items()},
        }


def gadget_sizes(d: int) -> dict[tuple[int, int], int]:
    k, r = divmod(d, 4)
    sizes = {e: k for e in K5_EDGES}
    for e in _PLUS_ONE[r]:
        sizes[e] = k + 1
    for e in _PLUS_TWO[r]:
        sizes[e] = k + 2
    return sizes


def _hub_gadget(hubs: tuple[int, ...], sizes: dict[tuple[int, int], int]) -> tuple[Graph, dict]:
    edges: list[tuple[int, int]] = []
    blocks: dict[tuple[int, int], tuple[int, ...]] = {}
    nxt = len(hubs)
    for a, b in combinations(hubs, 2):
        block = tuple(range(nxt, nxt + sizes[a, b]))
        nxt += len(block)
        blocks[a, b] = block
        for x in block:
            edges += [(a, x), (b, x)]
    step2 = Graph(range(nxt), edges)

    # single pass over the step-2 graph only; z vertices are never paired
    low = sorted(v for v in step2.vertices if step2.degree(v) == 2)
    for x, y in combinations(low, 2):
        if not step2.neighbors(x) & step2.neighbors(y):
            edges += [(x, nxt), (y, nxt)]
            nxt += 1
    return Graph(range(nxt), edges), blocks


def build_tight(d: int) -> TightInstance:
    """G_D: K5 with every edge replaced by K_{2,m}, then z-gadgets joining
    every pair of inner vertices that have no common neighbour.

    Labels: hubs 0..4, then the inner blocks in lexicographic hub-pair
    order, then one z vertex per pair in lexicographic pair order.
    """
    if d < 8:
        raise ParameterError(f"build_tight needs d >= 8 (k >= 2), got {d}")
    k, r = divmod(d, 4)
    g, blocks = _hub_gadget(HUBS, gadget_sizes(d))
    witness = frozenset(v for block in blocks.values() for v in block)
    return TightInstance(g, HUBS, witness, d, k, r, blocks)


def build_hub_gadget(num_hubs: int, m: int) -> TightInstance:
    """Same recipe on K_{num_hubs} with every block of size ``m``.

    The inner vertices form a clique of the square. ``d`` is the resulting
    maximum degree, not a target.
    """
    if num_hubs < 2 or m < 1:
        raise ParameterError("need at least 2 hubs and blocks of size >= 1")
    hubs = tuple(range(num_hubs))
    g, blocks = _hub_gadget(hubs, {e: m for e in combinations(hubs, 2)})
    witness = frozenset(v for block in blocks.values() for v in block)
    return TightInstance(g, hubs, witness, g.max_degree(), m, 0, blocks)


def random_2degenerate(n: int, attach: int = 2, seed: int = 0) -> Graph:
    """Grow a graph vertex by vertex, each new vertex joined to ``attach``
    distinct uniformly random earlier vertices. Reverse insertion order is a
    degeneracy order with at most ``attach`` later neighbours."""
    if n < 1:
        raise ParameterError("n must be at least 1")
    if attach not in (1, 2):
        raise ParameterError("attach must be 1 or 2")
    rng = random.Random(seed)
    edges = []
    for v in range(1, n):
        for u in rng.sample(range(v), min(attach, v)):
            edges.append((u, v))
    return Graph(range(n), edges)
