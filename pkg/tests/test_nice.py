from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from squareclique import (DomainError, Graph, PreconditionError, VertexOrder, build_tight, classify,
                          extract, prune_to_clique_support, random_2degenerate, run_token_pass,
                          square, verify_nice)
from squareclique.clique import max_clique
from squareclique.graph import induced_subgraph, path_graph
from squareclique.nice import is_consecutive, threshold


def tokens_by_formula(g, s, order):
    """primary(v): earlier neighbours in s. secondary(v): sum of primaries of earlier neighbours."""
    pos = {v: i for i, v in enumerate(order)}
    earlier = {v: [u for u in g.neighbors(v) if pos[u] < pos[v]] for v in order}
    primary = {v: sum(1 for u in earlier[v] if u in s) for v in order}
    secondary = {v: sum(primary[u] for u in earlier[v]) for v in order}
    return primary, secondary


def test_trace_primary_counts(trace_instance):
    g, s, order = trace_instance
    led = run_token_pass(g, s, order)
    assert [led.primary[v] for v in (4, 5, 6, 7)] == [2, 2, 3, 3]
    assert led.tokens(1) == 0
    assert led.tokens(5) == 5
    assert led.total() <= 6 * len(s)


def test_trace_matches_formula(trace_instance):
    g, s, order = trace_instance
    led = run_token_pass(g, s, order)
    primary, secondary = tokens_by_formula(g, s, order)
    assert led.primary == primary and led.secondary == secondary
    assert {v: led.tokens(v) for v in order} == {1: 0, 2: 1, 3: 0, 4: 3, 5: 5, 6: 7, 7: 8}


def test_trace_classification_large_d(trace_instance):
    g, s, order = trace_instance
    led = run_token_pass(g, s, order)
    cls = classify(led, g, s, order, 100)
    assert cls.basic == s and not cls.big and not cls.nonbasic and not cls.w
    assert threshold(100) == 21


def test_secondary_threshold_two(trace_instance):
    g, s, order = trace_instance
    led = run_token_pass(g, s, order, secondary_threshold=2)
    # vertex 2 holds one primary token and no longer relays
    assert led.secondary[4] == 0 and led.secondary[5] == 2


def test_token_pass_rejects_bad_order():
    g = Graph(range(4), [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    with pytest.raises(PreconditionError):
        run_token_pass(g, {0}, VertexOrder(range(4)))


def test_classify_small_d_all_nonbasic(trace_instance):
    g, s, order = trace_instance
    led = run_token_pass(g, s, order)
    cls = classify(led, g, s, order, 4)
    assert cls.basic == frozenset() and cls.nonbasic == s


def test_classify_zero_tokens():
    g = Graph(range(3), [])
    order = VertexOrder(range(3))
    led = run_token_pass(g, {0, 1, 2}, order)
    cls = classify(led, g, {0, 1, 2}, order, 40)
    assert cls.basic == {0, 1, 2} and not (cls.big | cls.nonbasic | cls.w)
    assert cls.threshold == Fraction(6)


def test_prune_examples():
    g = path_graph(3)
    assert prune_to_clique_support(g, {0, 2}) == g
    assert prune_to_clique_support(g, {0, 1, 2}) == g
    t = build_tight(8)
    pruned = prune_to_clique_support(t.graph, t.clique_witness)
    outside = t.graph.vertices - t.clique_witness
    assert not any(u in outside and v in outside for u, v in pruned.edges())
    assert pruned.num_edges == t.graph.num_edges  # every edge of G_8 touches an inner vertex
    with pytest.raises(PreconditionError, match="0 and 3"):
        prune_to_clique_support(path_graph(4), {0, 3})


def test_extract_rejects_large_degree():
    g = Graph(range(5), [(0, i) for i in range(1, 5)])
    with pytest.raises(PreconditionError):
        extract(g, {1, 2}, 3)


def test_extract_empty_clique():
    r = extract(build_tight(8).graph, set(), 8)
    assert r.s_star == frozenset() and r.g_star.num_edges == 0


def test_verify_nice_negative_cases():
    g = Graph([0, 1], [(0, 1)])
    rep = verify_nice(g, {0, 1}, VertexOrder([0, 1]))
    assert rep.clique_in_square and not rep.independent and not rep.nice
    g = Graph(range(3), [(0, 1), (1, 2)])
    rep = verify_nice(g, {0, 2}, VertexOrder([0, 1, 2]))
    assert rep.independent and not rep.consecutive
    rep = verify_nice(g, {0, 2}, VertexOrder([0, 1]))
    assert not rep.two_degenerate_order


def proof_conditions_hold(r):
    """The two facts the niceness argument rests on, evaluated on this run.

    1. every Basic vertex has all of its later neighbours in Big;
    2. every vertex outside S placed after the first S vertex of sigma is a
       later neighbour of some S vertex (sigma starts S as late as possible).
    """
    cls, sigma, g = r.classification, r.sigma, r.graph
    first = min((sigma.position(v) for v in r.s), default=len(sigma))
    c1 = all(set(sigma.later_neighbors(g, v)) <= cls.big for v in cls.basic)
    c2 = all(any(sigma.position(u) < sigma.position(v) for u in g.neighbors(v) & r.s)
             for v in sigma if v not in r.s and sigma.position(v) > first)
    return c1 and c2


def check_extraction(g, s, d):
    r = extract(g, s, d)
    rep = verify_nice(r.g_star, r.s_star, r.sigma_star)
    assert rep.clique_in_square
    assert r.s_star <= r.s
    assert all(u in r.s_star or v in r.s_star for u, v in r.g_star.edges())
    assert r.ledger.total() <= 6 * len(s)
    primary, secondary = tokens_by_formula(r.graph, r.s, list(r.sigma))
    assert r.ledger.primary == primary and r.ledger.secondary == secondary
    # square restricted to S* is unchanged by the edge deletions
    assert induced_subgraph(square(r.g_star), r.s_star) == induced_subgraph(square(g), r.s_star)
    cls = r.classification
    assert not cls.big & cls.basic
    assert r.s_star == cls.basic - cls.w
    if proof_conditions_hold(r):
        assert rep.nice, rep
    return r, rep


@pytest.mark.parametrize("d", [8, 12, 16, 17, 20, 24])
def test_extract_tight(d):
    t = build_tight(d)
    r, rep = check_extraction(t.graph, t.clique_witness, d)
    assert rep.nice
    if d >= 17:
        assert len(r.s_star) > 0


@given(st.integers(3, 40), st.integers(0, 10_000))
def test_extract_random_square_cliques(n, seed):
    g = random_2degenerate(n, 2, seed)
    s = max_clique(square(g)).members
    for d in (g.max_degree(), 4 * g.max_degree() + 20):
        check_extraction(g, s, d)


@given(st.integers(3, 40), st.integers(0, 10_000), st.sampled_from([1, 2, 4]))
def test_extract_independent_square_cliques(n, seed, scale):
    # a greedy independent subset of one neighbourhood is a square clique
    g = random_2degenerate(n, 2, seed)
    hub = max(sorted(g.vertices), key=g.degree)
    s = set()
    for u in sorted(g.neighbors(hub)):
        if not g.neighbors(u) & s:
            s.add(u)
    r, rep = check_extraction(g, s, scale * g.max_degree() + 4 * (scale - 1))
    assert rep.independent


def test_niceness_can_fail_outside_the_proof_conditions():
    # A triangle is its own square clique; with a large d every vertex is
    # Basic and nothing is Big, so S* keeps the triangle's edges.
    g = Graph(range(3), [(0, 1), (1, 2), (0, 2)])
    r, rep = check_extraction(g, {0, 1, 2}, 40)
    assert r.s_star == {0, 1, 2}
    assert not rep.independent and not proof_conditions_hold(r)


def test_is_consecutive():
    o = VertexOrder([4, 2, 7, 1])
    assert is_consecutive(o, {2, 7}) and is_consecutive(o, set())
    assert not is_consecutive(o, {4, 7})


def test_verify_nice_unknown_vertex():
    with pytest.raises(DomainError):
        verify_nice(path_graph(2), {5}, VertexOrder([0, 1]))
