"""Auxiliary structures built on a nice triple (G*, S*, sigma*).

* ``partition`` splits V into S*, T* (later vertices seeing S*) and R*.
* ``build_hstar`` contracts each S* vertex onto the pair of T* vertices it
  sees, producing a multigraph on T*.
* ``claim_diagnostics`` evaluates the degree and multiplicity inequalities
  that a hypothetical counterexample would have to satisfy, on real input.
* ``pair_statistics`` counts, for each pair of T* vertices, the S* and S
  vertices missing that pair, and the S* vertices joining it.
* ``build_jstar`` is the bipartite incidence graph between S \\ S* and T*.

Nothing here raises on a violated inequality: rows carry both sides and a
``holds`` flag.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb

from .degeneracy import degeneracy
from .errors import PreconditionError
from .graph import Graph, Multigraph, VertexOrder, complement, underlying_simple
from .nice import is_consecutive

# 6 * (331*2 + 10*C(331, 2) + 2000)
D0 = 3_292_872


def d0_formula() -> int:
    return 6 * (331 * 2 + 10 * comb(331, 2) + 2000)


@dataclass(frozen=True)
class Partition:
    s_star: frozenset[int]
    t_star: frozenset[int]
    r_star: frozenset[int]

    def to_json(self) -> dict:
        return {"s_star": sorted(self.s_star), "t_star": sorted(self.t_star),
                "r_star": sorted(self.r_star)}


@dataclass(frozen=True)
class HStar:
    multigraph: Multigraph
    edge_source: dict[int, tuple[int, int]]
    irregular: tuple[int, ...]

    def simple(self) -> Graph:
        return underlying_simple(self.multigraph)

    def simple_complement(self) -> Graph:
        return complement(self.simple())

    def to_json(self) -> dict:
        return {
            "vertices": sorted(self.multigraph.vertices),
            "multiplicity": [{"u": u, "v": v, "mu": c} for (u, v), c in self.multigraph.multiplicities().items()],
            "num_edges": self.multigraph.num_edges,
            "irregular": list(self.irregular),
        }


def _num(x: Fraction | int):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Row:
    name: str
    subject: tuple
    lhs: Fraction
    relation: str
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return {"<=": self.lhs <= self.rhs, ">=": self.lhs >= self.rhs, "<": self.lhs < self.rhs,
                ">": self.lhs > self.rhs, "==": self.lhs == self.rhs}[self.relation]

    def to_json(self) -> dict:
        return {"name": self.name, "subject": list(self.subject), "lhs": _num(self.lhs),
                "relation": self.relation, "rhs": _num(self.rhs), "holds": self.holds}


def _row(name, subject, lhs, relation, rhs) -> Row:
    return Row(name, tuple(subject), Fraction(lhs), relation, Fraction(rhs))


@dataclass
class DiagnosticsReport:
    rows: list[Row] = field(default_factory=list)

    def by_name(self, name: str) -> list[Row]:
        return [r for r in self.rows if r.name == name]

    def summary(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for r in self.rows:
            c = out.setdefault(r.name, {"rows": 0, "violations": 0})
            c["rows"] += 1
            c["violations"] += not r.holds
        return out

    def to_json(self) -> dict:
        return {"summary": self.summary(), "rows": [r.to_json() for r in self.rows]}


@dataclass(frozen=True)
class PairRow:
    i: int
    j: int
    d_set: frozenset[int]
    v_set: frozenset[int]
    s_set: frozenset[int]

    @property
    def d_ij(self) -> int:
        return len(self.d_set)

    @property
    def mu_ij(self) -> int:
        return len(self.v_set)

    @property
    def s_ij(self) -> int:
        return len(self.s_set)

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "d_ij": self.d_ij, "mu_ij": self.mu_ij, "s_ij": self.s_ij}


@dataclass(frozen=True)
class PairStats:
    pairs: tuple[PairRow, ...]
    outside_t_counts: dict[int, int]     # v in S \ S*  ->  |N_G(v) & T*|
    u_set: frozenset[int]                # S & T*
    w_set: frozenset[int]                # S & R*
    counting: dict | None                # present iff |T*| == 6
    outside_bound: dict | None           # present iff |T*| == 6 and d is given

    def pair(self, i: int, j: int) -> PairRow:
        i, j = min(i, j), max(i, j)
        for p in self.pairs:
            if (p.i, p.j) == (i, j):
                return p
        raise KeyError((i, j))

    def to_json(self) -> dict:
        return {
            "pairs": [p.to_json() for p in self.pairs],
            "outside_t_counts": {str(v): c for v, c in sorted(self.outside_t_counts.items())},
            "s_cap_t_size": len(self.u_set),
            "s_cap_r_size": len(self.w_set),
            "counting": self.counting,
            "outside_bound": self.outside_bound,
        }


@dataclass(frozen=True)
class JStar:
    graph: Graph
    w_set: frozenset[int]
    u_copies: dict[int, int]        # u in S & T*  ->  fresh label of its copy
    t_star: frozenset[int]
    x: int
    y: int
    z: int
    bipartite: bool
    two_degenerate: bool

    def to_json(self) -> dict:
        return {"x": self.x, "y": self.y, "z": self.z, "bipartite": self.bipartite,
                "two_degenerate": self.two_degenerate,
                "num_vertices": len(self.graph), "num_edges": self.graph.num_edges,
                "u_copies": {str(u): c for u, c in sorted(self.u_copies.items())},
                "integer_system_solution": (self.x, self.y, self.z) in enumerate_integer_solutions()}


# ---------------------------------------------------------------- partition / H*

def partition(g_star: Graph, s_star: Iterable[int], sigma_star: VertexOrder) -> Partition:
    s_star = g_star.check_subset(s_star)
    if not is_consecutive(sigma_star, s_star):
        raise PreconditionError("S* is not consecutive in the order", "partition")
    if not s_star:
        t_star: frozenset[int] = frozenset()
    else:
        last = max(sigma_star.position(v) for v in s_star)
        t_star = frozenset(v for v in g_star.vertices
                           if sigma_star.position(v) > last and g_star.neighbors(v) & s_star)
    r_star = g_star.vertices - s_star - t_star
    return Partition(s_star, t_star, r_star)


def build_hstar(g_star: Graph, p: Partition) -> HStar:
    """One H* edge per S* vertex that sees exactly two T* vertices; the rest are irregular."""
    edges = []
    source: dict[int, tuple[int, int]] = {}
    irregular = []
    for v in sorted(p.s_star):
        seen = sorted(g_star.neighbors(v) & p.t_star)
        if len(seen) == 2:
            source[v] = (seen[0], seen[1])
            edges.append((seen[0], seen[1]))
        else:
            irregular.append(v)
    return HStar(Multigraph.from_edges(p.t_star, edges), source, tuple(irregular))


# ---------------------------------------------------------------- diagnostics

def claim_diagnostics(h: HStar, s_star_size: int, d: int, *, g: Graph | None = None,
                      g_star: Graph | None = None, p: Partition | None = None,
                      pairs: PairStats | None = None) -> DiagnosticsReport:
    """Evaluate both sides of every checkable H* inequality.

    The optional graph context adds rows that need G*, the partition, or the
    pair table.
    """
    mg = h.multigraph
    s, D = s_star_size, d
    deg = {v: mg.degree(v) for v in mg.vertices}
    nbrs = {v: mg.neighbors(v) for v in mg.vertices}
    m = mg.num_edges
    simple_edges = sorted(mg.multiplicities())
    rep = DiagnosticsReport()
    add = rep.rows.append

    add(_row("s_star_window_lower", (), s, ">", Fraction(5 * D, 2) - 60))
    add(_row("s_star_window_upper", (), s, "<=", Fraction(5 * D, 2)))
    add(_row("t_star_size", (), len(mg.vertices), "==", 6))
    add(_row("hstar_edge_count", (), m, "==", s))
    add(_row("hstar_max_degree", (), mg.max_degree(), "<=", D))

    for u, v in simple_edges:
        through = deg[u] + deg[v] - mg.mu(u, v)
        add(_row("edges_missing_both_ends", (u, v), m - through, "<=", D - 2))
        add(_row("edge_end_degree_sum", (u, v), through, ">=", s - D + 2))

    for v in sorted(mg.vertices):
        nb = nbrs[v]
        add(_row("hstar_neighbor_count", (v,), len(nb), ">=", 2))
        for w in sorted(nb):
            rest = sum(mg.mu(u, v) for u in nb if u != w)
            add(_row("multiplicity_sum_without_one", (v, w), rest, ">=", s - 2 * D + 2))
        if len(nb) >= 2:
            add(_row("degree_vs_neighbor_count", (v,), deg[v], ">=",
                     Fraction(len(nb) * (s - 2 * D + 2), len(nb) - 1)))
        add(_row("balanced_degree_upper", (v,), Fraction(25 * D - 9 * s - 50, 3), ">=", deg[v]))
        add(_row("balanced_degree_lower", (v,), deg[v], ">=", Fraction(3 * s - 5 * D + 10, 3)))

    for (a, b), (x, y) in combinations(simple_edges, 2):
        if len({a, b, x, y}) < 4:
            continue
        cross = mg.mu(a, x) + mg.mu(a, y) + mg.mu(b, x) + mg.mu(b, y)
        add(_row("disjoint_edges_cross_multiplicity", (a, b, x, y), cross, ">=", s - 2 * D + 2))

    for a, b in combinations(sorted(mg.vertices), 2):
        add(_row("pair_multiplicity_lower", (a, b), mg.mu(a, b), ">=", Fraction(87 * s - 217 * D + 374, 3)))
        missing = m - deg[a] - deg[b] + mg.mu(a, b)
        add(_row("pair_missing_lower", (a, b), missing, ">=", 6 * s - 14 * D + 28))

    if g_star is not None and p is not None:
        for v in sorted(p.t_star):
            add(_row("t_star_support_lower", (v,), len(g_star.neighbors(v) & p.s_star), ">=",
                     Fraction(D, 2) - 57))
        for v in sorted(p.s_star):
            add(_row("s_star_t_count", (v,), len(g_star.neighbors(v) & p.t_star), "==", 2))
        if pairs is not None:
            for row in pairs.pairs:
                for v in sorted(row.v_set):
                    r_v = [w for w in g_star.neighbors(v) & p.r_star if g_star.neighbors(w) & row.d_set]
                    add(_row("r_v_lower", (row.i, row.j, v), len(r_v), ">=", row.d_ij))
    if pairs is not None:
        for row in pairs.pairs:
            add(_row("pair_outside_upper", (row.i, row.j), row.s_ij, "<=", D - 2 - row.d_ij))
        for v, c in sorted(pairs.outside_t_counts.items()):
            add(_row("outside_vertex_t_count", (v,), c, ">=", 2))
    return rep


def pair_statistics(g: Graph, g_star: Graph, s: Iterable[int], p: Partition,
                    d: int | None = None) -> PairStats:
    """D_ij, V_ij and S_ij for every pair of T* vertices (sorted by pair).

    When |T*| = 6 the report also carries the double count of sum s_ij by
    the number of T* vertices each S \\ S* vertex misses, and (given d) both
    sides of the bound sum s_ij <= 15d - 6|S*| - 30.
    """
    s = g.check_subset(s)
    if not p.s_star <= s:
        raise PreconditionError("S* must be a subset of S", "pair-statistics")
    t = p.t_star
    outside = s - p.s_star
    t_seen = {v: g_star.neighbors(v) & t for v in p.s_star}
    rows = []
    for a, b in combinations(sorted(t), 2):
        pair = {a, b}
        d_set = frozenset(v for v in p.s_star if not t_seen[v] & pair)
        v_set = frozenset(v for v in p.s_star if t_seen[v] == pair)
        s_set = frozenset(v for v in outside - pair if not g.neighbors(v) & pair)
        rows.append(PairRow(a, b, d_set, v_set, s_set))
    counts = {v: len(g.neighbors(v) & t) for v in outside}
    u_set = outside & t
    w_set = outside - t

    counting = bound = None
    if len(t) == 6:
        # a vertex of U sees i T* vertices and is itself in T*; one of W sees i+1
        missed = {v: 5 - counts[v] if v in u_set else 6 - counts[v] for v in outside}
        alpha = {i: sum(1 for v in u_set if counts[v] == i) for i in range(0, 6)}
        beta = {i: sum(1 for v in w_set if counts[v] == i + 1) for i in range(-1, 6)}
        lhs = sum(r.s_ij for r in rows)
        class_rhs = 6 * (alpha[1] + beta[1]) + 3 * (alpha[2] + beta[2]) + (alpha[3] + beta[3])
        full_rhs = sum(comb(k, 2) for k in missed.values())
        counting = {
            "sum_s_ij": lhs,
            "weighted_class_sum": class_rhs,
            "weighted_sum_all_vertices": full_rhs,
            "alpha": {str(i): alpha[i] for i in range(1, 6)},
            "beta": {str(i): beta[i] for i in range(1, 6)},
            "low_count_vertices": sorted(v for v in outside if missed[v] >= 5),
            "identity_holds": lhs == class_rhs,
        }
        if d is not None:
            bound = {
                "lhs": lhs,
                "sum_pair_slack": sum(d - 2 - r.d_ij for r in rows),
                "rhs": 15 * d - 6 * len(p.s_star) - 30,
                "holds": lhs <= 15 * d - 6 * len(p.s_star) - 30,
            }
    return PairStats(tuple(rows), counts, u_set, w_set, counting, bound)


# ---------------------------------------------------------------- J*

def _is_bipartite(g: Graph, left: frozenset[int], right: frozenset[int]) -> bool:
    return all((u in left) != (v in left) and {u, v} <= left | right for u, v in g.edges())


def build_jstar(g: Graph, s: Iterable[int], p: Partition) -> JStar:
    """Incidence graph between S \\ S* and T*, with each u in S & T* split into
    u (on the T* side) and a fresh copy u* carrying u's T* edges plus u*u."""
    s = g.check_subset(s)
    if not p.t_star:
        raise PreconditionError("J* needs a non-empty T*", "jstar")
    t = p.t_star
    u_set = (s - p.s_star) & t
    w_set = (s - p.s_star) & p.r_star
    nxt = g.max_label() + 1
    copies = {u: nxt + i for i, u in enumerate(sorted(u_set))}
    edges = [(a, b) for a in sorted(w_set) for b in sorted(g.neighbors(a) & t)]
    for u, c in copies.items():
        edges += [(c, b) for b in sorted(g.neighbors(u) & t)]
        edges.append((c, u))
    left = w_set | frozenset(copies.values())
    jg = Graph(left | t, edges)
    tcount = [len(jg.neighbors(v) & t) for v in left]
    x = sum(1 for c in tcount if c == 3)
    y = sum(1 for c in tcount if c == 4)
    z = sum(1 for c in tcount if c >= 5)
    two_deg = len(jg) == 0 or degeneracy(jg) <= 2
    return JStar(jg, w_set, copies, t, x, y, z, _is_bipartite(jg, left, t), two_deg)


def enumerate_integer_solutions() -> frozenset[tuple[int, int, int]]:
    """All (x, y, z) >= 0 with 3x+5y+6z > 30, x+y+z <= 8, y+z <= 4, z <= 2."""
    return frozenset(
        (x, y, z) for x, y, z in product(range(9), repeat=3)
        if 3 * x + 5 * y + 6 * z > 30 and x + y + z <= 8 and y + z <= 4 and z <= 2)
