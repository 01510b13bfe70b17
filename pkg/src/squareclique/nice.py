"""Token passing along a 2-degeneracy order and extraction of a nice triple.

Given a graph G, a clique S of G^2 and the degree parameter D, ``extract``
returns (G*, S*, sigma*) where S* is a clique of (G*)^2, independent in G*,
and consecutive in the 2-degeneracy order sigma* of G*. Whether the last two
properties hold on a given input is checked by ``verify_nice`` rather than
assumed.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from .degeneracy import degeneracy_order, verify_order
from .errors import DomainError, PreconditionError
from .graph import Graph, VertexOrder
from .square import is_clique_in_square, non_adjacent_pair_in_square

TOKEN_SHARE_PER_CLIQUE_VERTEX = 6


@dataclass(frozen=True)
class TokenLedger:
    primary: dict[int, int]
    secondary: dict[int, int]

    def tokens(self, v: int) -> int:
        return self.primary[v] + self.secondary[v]

    def total(self) -> int:
        return sum(self.primary.values()) + sum(self.secondary.values())

    def to_json(self) -> dict:
        return {str(v): {"primary": self.primary[v], "secondary": self.secondary[v]}
                for v in sorted(self.primary)}


@dataclass(frozen=True)
class Classification:
    big: frozenset[int]
    basic: frozenset[int]
    nonbasic: frozenset[int]
    w: frozenset[int]
    d: int

    @property
    def threshold(self) -> Fraction:
        return threshold(self.d)

    def to_json(self) -> dict:
        return {"threshold": str(self.threshold),
                **{name: sorted(getattr(self, name)) for name in ("big", "basic", "nonbasic", "w")}}


@dataclass(frozen=True)
class ExtractionResult:
    graph: Graph            # G after pruning to edges touching S
    s: frozenset[int]
    sigma: VertexOrder
    g_star: Graph
    s_star: frozenset[int]
    sigma_star: VertexOrder
    classification: Classification
    ledger: TokenLedger


@dataclass(frozen=True)
class NicenessReport:
    clique_in_square: bool
    independent: bool
    two_degenerate_order: bool
    consecutive: bool

    @property
    def nice(self) -> bool:
        return self.clique_in_square and self.independent and self.two_degenerate_order and self.consecutive

    def to_json(self) -> dict:
        return {"clique_in_square": self.clique_in_square, "independent": self.independent,
                "two_degenerate_order": self.two_degenerate_order,
                "consecutive": self.consecutive, "nice": self.nice}


def threshold(d: int) -> Fraction:
    return Fraction(d, 4) - 4


def _require_square_clique(g: Graph, s: frozenset[int], stage: str) -> None:
    pair = non_adjacent_pair_in_square(g, s)
    if pair is not None:
        raise PreconditionError(
            f"vertices {pair[0]} and {pair[1]} are not adjacent in the square", stage)


def prune_to_clique_support(g: Graph, s: Iterable[int]) -> Graph:
    """Drop every edge with both endpoints outside ``s``.

    Any distance-2 path between two members of ``s`` has both of its edges
    touching ``s``, so ``s`` stays a clique of the square.
    """
    s = g.check_subset(s)
    _require_square_clique(g, s, "prune")
    return g.without_edges(lambda u, v: u not in s and v not in s)


def run_token_pass(g: Graph, s: Iterable[int], order: VertexOrder,
                   secondary_threshold: int = 1) -> TokenLedger:
    """Delete vertices in ``order`` and distribute tokens.

    A deleted vertex of ``s`` gives one primary token to each later neighbour.
    A deleted vertex holding p >= ``secondary_threshold`` primary tokens gives
    p secondary tokens to each later neighbour. Secondary tokens are never
    passed on. A vertex only receives from earlier vertices, so its counts are
    final when it is deleted.
    """
    s = g.check_subset(s)
    ok, worst = verify_order(g, order, 2)
    if not ok:
        raise PreconditionError(f"order is not a 2-degeneracy order (a vertex has {worst} later neighbours)",
                                "token-pass")
    primary = {v: 0 for v in order}
    secondary = {v: 0 for v in order}
    for v in order:
        later = order.later_neighbors(g, v)
        p = primary[v]
        for u in later:
            if v in s:
                primary[u] += 1
            if p >= secondary_threshold and p > 0:
                secondary[u] += p
    return TokenLedger(primary, secondary)


def classify(ledger: TokenLedger, g: Graph, s: Iterable[int], order: VertexOrder, d: int) -> Classification:
    s = frozenset(s)
    th = threshold(d)
    big = frozenset(v for v, p in ledger.primary.items() if p > th)
    basic = frozenset(v for v in s if ledger.tokens(v) < th)
    nonbasic = s - basic
    w = frozenset(u for v in nonbasic for u in order.later_neighbors(g, v))
    return Classification(big, basic, nonbasic, w, d)


def extract(g: Graph, s: Iterable[int], d: int, secondary_threshold: int = 1) -> ExtractionResult:
    s = g.check_subset(s)
    _require_square_clique(g, s, "extract")
    if g.max_degree() > d:
        raise PreconditionError(f"max degree {g.max_degree()} exceeds d={d}", "extract")
    pruned = prune_to_clique_support(g, s)
    cert = degeneracy_order(pruned, 2, avoid=s)
    if cert is None:
        raise PreconditionError("graph is not 2-degenerate", "extract")
    sigma = cert.order
    ledger = run_token_pass(pruned, s, sigma, secondary_threshold)
    cls = classify(ledger, pruned, s, sigma, d)

    s_star = cls.basic - cls.w
    front = (cls.nonbasic | cls.w) - cls.big
    head = [v for v in sigma if v in front]
    tail = [v for v in sigma if v in cls.big]
    middle = [v for v in sigma if v not in front and v not in cls.big]
    sigma_star = VertexOrder(head + middle + tail)
    g_star = pruned.without_edges(lambda u, v: u not in s_star and v not in s_star)
    return ExtractionResult(pruned, s, sigma, g_star, s_star, sigma_star, cls, ledger)


def is_consecutive(order: VertexOrder, s: Iterable[int]) -> bool:
    pos = sorted(order.position(v) for v in s)
    return not pos or pos[-1] - pos[0] == len(pos) - 1


def verify_nice(g_star: Graph, s_star: Iterable[int], sigma_star: VertexOrder) -> NicenessReport:
    s_star = g_star.check_subset(s_star)
    clique = is_clique_in_square(g_star, s_star)
    independent = not any(g_star.neighbors(v) & s_star for v in s_star)
    try:
        degenerate, _ = verify_order(g_star, sigma_star, 2)
    except DomainError:
        degenerate = False
    consecutive = set(sigma_star) == set(g_star.vertices) and is_consecutive(sigma_star, s_star)
    return NicenessReport(clique, independent, degenerate, consecutive)
