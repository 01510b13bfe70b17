from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from squareclique import (D0, Graph, Multigraph, PreconditionError, VertexOrder, build_hstar, build_hub_gadget,
                          build_jstar, build_tight, claim_diagnostics, complement, enumerate_integer_solutions,
                          extract, pair_statistics, partition, underlying_simple)
from squareclique.hstar import HStar, Partition, d0_formula

LISTED_SOLUTIONS = {(4, 4, 0), (5, 2, 1), (4, 3, 1), (5, 1, 2), (3, 2, 2), (4, 2, 2)}


def run(inst, d=None):
    d = inst.d if d is None else d
    r = extract(inst.graph, inst.clique_witness, d)
    p = partition(r.g_star, r.s_star, r.sigma_star)
    return r, p, build_hstar(r.g_star, p)


# ---------------------------------------------------------------- integer system and constant

def test_integer_solutions_match_listed_set():
    sols = enumerate_integer_solutions()
    assert sols == LISTED_SOLUTIONS
    assert (4, 4, 0) in sols and (8, 0, 0) not in sols and len(sols) == 6


def test_integer_solutions_satisfy_system():
    for x, y, z in enumerate_integer_solutions():
        assert 3 * x + 5 * y + 6 * z > 30 and x + y + z <= 8 and y + z <= 4 and z <= 2


def test_d0_constant():
    assert D0 == d0_formula() == 6 * (331 * 2 + 10 * (331 * 330 // 2) + 2000) == 3_292_872


# ---------------------------------------------------------------- partition

def test_partition_nothing_after_s_star():
    g = Graph(range(3), [(0, 2), (1, 2)])
    p = partition(g, {2}, VertexOrder([0, 1, 2]))
    assert p.t_star == frozenset() and p.r_star == {0, 1}


def test_partition_edgeless():
    g = Graph(range(4))
    p = partition(g, {1, 2}, VertexOrder([0, 1, 2, 3]))
    assert p.t_star == frozenset() and p.r_star == {0, 3}


def test_partition_requires_consecutive():
    g = Graph(range(3), [(0, 1), (1, 2)])
    with pytest.raises(PreconditionError):
        partition(g, {0, 2}, VertexOrder([0, 1, 2]))


@pytest.mark.parametrize("d", [8, 12, 17, 20, 24])
def test_partition_of_tight_runs(d):
    r, p, h = run(build_tight(d))
    assert p.s_star | p.t_star | p.r_star == r.g_star.vertices
    assert not (p.s_star & p.t_star or p.s_star & p.r_star or p.t_star & p.r_star)
    for v in p.r_star:
        assert len(r.g_star.neighbors(v) & p.s_star) <= 2
        assert len(r.graph.neighbors(v) & p.s_star) == len(r.g_star.neighbors(v) & p.s_star)
    assert h.multigraph.num_edges + len(h.irregular) == len(p.s_star)
    if d >= 17:
        assert p.t_star == set(range(5))


# ---------------------------------------------------------------- H*

def test_hstar_all_parallel():
    g = Graph(range(5), [(v, a) for v in (2, 3, 4) for a in (0, 1)])
    p = Partition(frozenset({2, 3, 4}), frozenset({0, 1}), frozenset())
    h = build_hstar(g, p)
    assert h.multigraph.mu(0, 1) == 3 and not h.irregular
    assert h.edge_source == {2: (0, 1), 3: (0, 1), 4: (0, 1)}


def test_hstar_irregular_vertex():
    g = Graph(range(4), [(2, 0), (2, 1), (3, 0)])
    h = build_hstar(g, Partition(frozenset({2, 3}), frozenset({0, 1}), frozenset()))
    assert h.irregular == (3,) and h.multigraph.num_edges == 1


@pytest.mark.parametrize("inst", [build_tight(17), build_tight(22), build_hub_gadget(6, 3), build_hub_gadget(7, 3)],
                         ids=["tight17", "tight22", "k6x3", "k7x3"])
def test_hstar_handshake_and_degree(inst):
    r, p, h = run(inst)
    assert not h.irregular
    m = h.multigraph
    assert sum(m.degree(v) for v in m.vertices) == 2 * len(p.s_star)
    assert m.num_edges == len(p.s_star)
    assert m.max_degree() <= r.g_star.max_degree()


def test_simple_graph_and_complement_roundtrip():
    _, p, h = run(build_hub_gadget(6, 3))
    h0, c = h.simple(), h.simple_complement()
    assert h0 == underlying_simple(h.multigraph)
    for u, v in combinations(sorted(p.t_star), 2):
        assert h0.has_edge(u, v) != c.has_edge(u, v)
    assert complement(c) == h0


# ---------------------------------------------------------------- diagnostics

def hstar_of(vertices, edges):
    return HStar(Multigraph.from_edges(vertices, edges), {}, ())


def test_diagnostics_single_edge():
    rep = claim_diagnostics(hstar_of([0, 1], [(0, 1)] * 5), 5, 10)
    (row,) = rep.by_name("edges_missing_both_ends")
    assert (row.lhs, row.rhs, row.holds) == (0, 8, True)


def test_diagnostics_two_disjoint_edges():
    rep = claim_diagnostics(hstar_of(range(4), [(0, 1), (2, 3)]), 2, 3)
    rows = rep.by_name("edges_missing_both_ends")
    assert [(r.lhs, r.rhs, r.holds) for r in rows] == [(1, 1, True), (1, 1, True)]
    (cross,) = rep.by_name("disjoint_edges_cross_multiplicity")
    assert cross.lhs == 0 and cross.rhs == -2 and cross.holds


def test_diagnostic_rows_carry_both_sides():
    inst = build_tight(16)
    r, p, h = run(inst)
    pairs = pair_statistics(r.graph, r.g_star, r.s, p, 16)
    rep = claim_diagnostics(h, len(p.s_star), 16, g_star=r.g_star, p=p, pairs=pairs)
    js = rep.to_json()
    assert js["rows"] and all({"name", "lhs", "rhs", "holds", "relation", "subject"} <= set(row) for row in js["rows"])


def test_diagnostics_on_k6_gadget_include_every_family():
    inst = build_hub_gadget(6, 3)
    r, p, h = run(inst)
    pairs = pair_statistics(r.graph, r.g_star, r.s, p, inst.d)
    rep = claim_diagnostics(h, len(p.s_star), inst.d, g_star=r.g_star, p=p, pairs=pairs)
    names = set(rep.summary())
    for name in ("edges_missing_both_ends", "edge_end_degree_sum", "multiplicity_sum_without_one",
                 "degree_vs_neighbor_count", "disjoint_edges_cross_multiplicity", "balanced_degree_upper",
                 "balanced_degree_lower", "pair_multiplicity_lower", "pair_missing_lower", "r_v_lower",
                 "pair_outside_upper", "t_star_support_lower", "outside_vertex_t_count", "s_star_window_lower"):
        assert name in names
    # the underlying simple graph of this H* is K6
    mult = h.multigraph.multiplicities()
    assert len(mult) == 15 and sum(mult.values()) == len(p.s_star)


def test_diagnostic_values_by_hand():
    # triangle 0-1-2 with mu(01)=2, mu(12)=1, mu(02)=1; s*=4, d=5
    rep = claim_diagnostics(hstar_of(range(3), [(0, 1), (0, 1), (1, 2), (0, 2)]), 4, 5)
    row = next(r for r in rep.by_name("edge_end_degree_sum") if r.subject == (0, 1))
    assert (row.lhs, row.rhs) == (3 + 3 - 2, 4 - 5 + 2)
    row = next(r for r in rep.by_name("multiplicity_sum_without_one") if r.subject == (0, 1))
    assert (row.lhs, row.rhs) == (1, 4 - 10 + 2)
    row = next(r for r in rep.by_name("balanced_degree_upper") if r.subject == (1,))
    assert row.lhs * 3 == 125 - 36 - 50 and row.rhs == 3


# ---------------------------------------------------------------- pair statistics

def pair_sets_by_brute_force(g, g_star, s, p):
    out = {}
    for a, b in combinations(sorted(p.t_star), 2):
        d_set = {v for v in p.s_star if not g_star.has_edge(v, a) and not g_star.has_edge(v, b)}
        v_set = {v for v in p.s_star
                 if {u for u in p.t_star if g_star.has_edge(v, u)} == {a, b}}
        s_set = {v for v in s if v not in p.s_star and v not in (a, b)
                 and not g.has_edge(v, a) and not g.has_edge(v, b)}
        out[a, b] = (d_set, v_set, s_set)
    return out


@st.composite
def synthetic(draw):
    n = draw(st.integers(8, 22))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph(range(n), [e for e, k in zip(pairs, keep) if k])
    perm = draw(st.permutations(range(n)))
    t = frozenset(perm[:6])
    k = draw(st.integers(0, n - 6))
    s_star = frozenset(perm[6:6 + k])
    extra = draw(st.sets(st.sampled_from(perm), max_size=n))
    s = s_star | (frozenset(extra) - s_star)
    return g, s, Partition(s_star, t, frozenset(range(n)) - t - s_star)


@given(synthetic())
def test_pair_sets_match_brute_force(case):
    g, s, p = case
    stats = pair_statistics(g, g, s, p)
    ref = pair_sets_by_brute_force(g, g, s, p)
    assert [(r.i, r.j) for r in stats.pairs] == sorted(ref)
    for row in stats.pairs:
        assert (row.d_set, row.v_set, row.s_set) == tuple(map(frozenset, ref[row.i, row.j]))
        assert not row.d_set & row.v_set


@given(synthetic())
def test_counting_identity(case):
    g, s, p = case
    c = pair_statistics(g, g, s, p).counting
    brute = sum(len(v[2]) for v in pair_sets_by_brute_force(g, g, s, p).values())
    assert c["sum_s_ij"] == brute == c["weighted_sum_all_vertices"]
    outside = s - p.s_star
    in_regime = all(len(g.neighbors(v) & p.t_star) >= (1 if v in p.t_star else 2) for v in outside)
    if in_regime:
        assert c["identity_holds"] and c["weighted_class_sum"] == brute
    else:
        assert c["low_count_vertices"]


def test_counting_identity_low_count_vertex():
    # one S vertex outside T* that sees no T* vertex: it misses all 15 pairs
    g = Graph(range(7))
    p = Partition(frozenset(), frozenset(range(6)), frozenset({6}))
    c = pair_statistics(g, g, {6}, p).counting
    assert c["sum_s_ij"] == 15 == c["weighted_sum_all_vertices"]
    assert c["weighted_class_sum"] == 0 and not c["identity_holds"]


def test_pair_statistics_small_t_star():
    g = Graph(range(3), [(0, 1)])
    p = Partition(frozenset({0}), frozenset({1}), frozenset({2}))
    stats = pair_statistics(g, g, {0}, p)
    assert stats.pairs == () and stats.counting is None


def test_pair_statistics_two_vertex_t_star():
    g = Graph(range(5), [(2, 0), (2, 1), (3, 0)])
    p = Partition(frozenset({2, 3, 4}), frozenset({0, 1}), frozenset())
    (row,) = pair_statistics(g, g, {2, 3, 4}, p).pairs
    assert row.d_set == {4} and row.v_set == {2}


def test_pair_statistics_requires_s_star_in_s():
    g = Graph(range(3))
    with pytest.raises(PreconditionError):
        pair_statistics(g, g, {1}, Partition(frozenset({0}), frozenset(), frozenset({1, 2})))


@pytest.mark.parametrize("m", [3, 4, 5])
def test_k6_gadget_pair_sums(m):
    inst = build_hub_gadget(6, m)
    r, p, h = run(inst)
    stats = pair_statistics(r.graph, r.g_star, r.s, p, inst.d)
    assert len(p.t_star) == 6 and not h.irregular
    assert sum(row.d_ij for row in stats.pairs) == 6 * h.multigraph.num_edges
    assert sum(row.mu_ij for row in stats.pairs) == h.multigraph.num_edges
    assert stats.counting["identity_holds"]
    b = stats.outside_bound
    assert b["rhs"] == 15 * inst.d - 6 * len(p.s_star) - 30


# ---------------------------------------------------------------- J*

def test_jstar_empty_sides():
    g = Graph(range(8), [(6, 0), (6, 1), (7, 2), (7, 3)])
    p = Partition(frozenset({6, 7}), frozenset(range(6)), frozenset())
    j = build_jstar(g, {6, 7}, p)
    assert j.graph.vertices == set(range(6)) and j.graph.num_edges == 0
    assert (j.x, j.y, j.z) == (0, 0, 0) and j.bipartite


def test_jstar_without_u_is_subgraph_of_j():
    inst = build_tight(17)
    r, p, _ = run(inst)
    j = build_jstar(r.graph, r.s, p)
    assert not j.u_copies
    assert all(r.graph.has_edge(u, v) for u, v in j.graph.edges())
    assert j.bipartite and j.two_degenerate


def test_jstar_copies_u_vertices():
    # T* = 0..5; vertex 0 is also in S (so in U) and sees T* vertices 1 and 2
    g = Graph(range(8), [(0, 1), (0, 2), (7, 3), (7, 4), (7, 5), (6, 3), (6, 4)])
    p = Partition(frozenset({6}), frozenset(range(6)), frozenset({7}))
    j = build_jstar(g, {0, 6, 7}, p)
    copy = j.u_copies[0]
    assert copy == 8
    assert j.graph.neighbors(copy) == {0, 1, 2}
    assert j.graph.neighbors(7) == {3, 4, 5}
    assert (j.x, j.y, j.z) == (2, 0, 0) and j.bipartite


def test_jstar_requires_t_star():
    g = Graph(range(2))
    with pytest.raises(PreconditionError):
        build_jstar(g, {0}, Partition(frozenset({0}), frozenset(), frozenset({1})))


@given(synthetic())
def test_jstar_always_bipartite_with_fresh_labels(case):
    g, s, p = case
    j = build_jstar(g, s, p)
    assert j.bipartite
    assert all(c > g.max_label() for c in j.u_copies.values())
    left = j.graph.vertices - p.t_star
    counts = [len(j.graph.neighbors(v) & p.t_star) for v in left]
    assert (j.x, j.y, j.z) == (counts.count(3), counts.count(4), sum(c >= 5 for c in counts))
