"""Structural invariants checked on random instances."""

import random

from hypothesis import given, settings, strategies as st

from toricgraphs.binomials import binomial_canonical, m_coprime, normal_form
from toricgraphs.families import (
    random_connected_bipartite,
    random_theta_sum,
    six_cycle_with_chord,
)
from toricgraphs.fan import universal_gb
from toricgraphs.graphs import (
    EdgeGlue,
    biconnected_blocks,
    build_graph,
    clique_sum,
    cycle_chords,
    enumerate_chordless_cycles,
    enumerate_cycles,
    enumerate_even_closed_walks,
    induced_subgraph,
    is_chordless_graph,
    theta_graph,
)
from toricgraphs.ideals import (
    cycle_binomial,
    markov_basis_bipartite,
    toric_ideal,
    walk_binomial,
)
from toricgraphs.lattice import minimal_generators


@st.composite
def small_graphs(draw):
    n = draw(st.integers(2, 7))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, mask) if keep]
    return build_graph(n, edges)


@settings(max_examples=50, deadline=None)
@given(small_graphs())
def test_chordless_subset_of_cycles(g):
    cycles = enumerate_cycles(g)
    chordless = enumerate_chordless_cycles(g)
    assert len(chordless) <= len(cycles)
    assert (len(chordless) == len(cycles)) == is_chordless_graph(g)


@settings(max_examples=50, deadline=None)
@given(small_graphs())
def test_block_partition(g):
    blocks, _ = biconnected_blocks(g)
    assert sorted(e for b in blocks for e in b) == list(range(g.m))
    # an edge's block contains both endpoints in its vertex set
    for b in blocks:
        verts = set()
        for e in b:
            verts.update(g.edges[e])
        for e in b:
            assert set(g.edges[e]) <= verts


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 4), st.integers(2, 4))
def test_theta_cycle_structure(r, k):
    g = theta_graph(r, k)
    cycles = enumerate_cycles(g)
    assert len(cycles) == r * (r - 1) // 2
    assert all(c.length == 2 * k for c in cycles)
    assert is_chordless_graph(g)


def test_cycle_length_congruence_uniform_chordless():
    # when all chordless cycles share length g0, every cycle length is
    # congruent to 2 modulo g0 - 2
    rng = random.Random(2)
    samples = [six_cycle_with_chord()]
    for _ in range(5):
        samples.append(random_theta_sum(rng, k=rng.randint(3, 4), leaves=2))
    for g in samples:
        lengths = {c.length for c in enumerate_chordless_cycles(g)}
        if len(lengths) != 1:
            continue
        (g0,) = lengths
        for c in enumerate_cycles(g):
            assert (c.length - 2) % (g0 - 2) == 0


def test_menger_neighbor_bound():
    # uniform chordless length >= 5: a vertex outside a biconnected induced
    # subgraph sees at most one of its vertices
    rng = random.Random(4)
    for _ in range(4):
        g = random_theta_sum(rng, k=3, leaves=2)
        verts = list(range(g.n))
        for _ in range(30):
            size = rng.randint(4, max(4, g.n - 2))
            subset = rng.sample(verts, size)
            sub = induced_subgraph(g, subset)
            blocks, cuts = biconnected_blocks(sub.graph)
            if len(blocks) != 1 or cuts or sub.graph.m < sub.graph.n:
                continue  # not biconnected
            inside = set(subset)
            for v in verts:
                if v in inside:
                    continue
                nbrs = sum(1 for w in g.adjacency[v] if w in inside)
                assert nbrs <= 1


def test_clique_sum_seam_chord_property():
    # cycles of a 2-clique sum either stay inside one summand or pick up
    # the seam edge as a chord
    rng = random.Random(5)
    for _ in range(5):
        g1 = theta_graph(rng.randint(2, 3), rng.randint(2, 3))
        g2 = theta_graph(rng.randint(2, 3), rng.randint(2, 3))
        e1 = rng.randrange(g1.m)
        e2 = rng.randrange(g2.m)
        s = clique_sum(g1, g2, EdgeGlue(e1, e2))
        g = s.graph
        side1 = set(range(g1.m))
        side2 = set(s.edge_map2)
        for c in enumerate_cycles(g):
            edges = set(c.edge_indices)
            if edges <= side1 or edges <= side2:
                continue
            assert e1 in cycle_chords(g, c)


def test_cycle_binomials_have_coprime_sides():
    rng = random.Random(6)
    for _ in range(10):
        g = random_connected_bipartite(rng, max_edges=10)
        for c in enumerate_cycles(g):
            b = cycle_binomial(c, g.m)
            assert m_coprime(b.plus, b.minus)


def test_toric_generators_have_coprime_sides():
    rng = random.Random(7)
    for _ in range(10):
        g = random_connected_bipartite(rng, max_edges=10)
        gi = toric_ideal(g)
        for b in gi.generators:
            assert m_coprime(b.plus, b.minus)


def test_graph_binomials_are_homogeneous():
    rng = random.Random(8)
    for _ in range(5):
        g = random_connected_bipartite(rng, max_edges=10)
        for w in enumerate_even_closed_walks(g, 6):
            b = walk_binomial(w, g.m)
            if b is not None:
                assert b.degree == sum(b.minus)


def test_markov_contained_in_universal():
    for g in (six_cycle_with_chord(), theta_graph(3, 2), theta_graph(2, 3)):
        gi = toric_ideal(g)
        uni = universal_gb(gi.generators)
        mg = minimal_generators(gi.generators, gi.A, groebner=gi.groebner())
        for b in mg.markov:
            assert binomial_canonical(b) in uni


def test_even_walk_enumeration_includes_cycles():
    rng = random.Random(9)
    for _ in range(5):
        g = random_connected_bipartite(rng, max_edges=9)
        walks = enumerate_even_closed_walks(g, 8)
        keys = set()
        for w in walks:
            b = walk_binomial(w, g.m)
            if b is not None:
                keys.add(binomial_canonical(b))
        for c in enumerate_cycles(g):
            if c.length <= 8:
                assert cycle_binomial(c, g.m) in keys


def test_bipartite_markov_matches_fiber_method_random():
    rng = random.Random(10)
    for _ in range(10):
        g = random_connected_bipartite(rng, max_edges=10)
        gi = toric_ideal(g)
        mg = minimal_generators(gi.generators, gi.A, groebner=gi.groebner())
        markov = markov_basis_bipartite(g)
        assert mg.mu == len(markov)
        gb = gi.groebner().elements
        assert all(normal_form(b, gb) is None for b in markov)


def test_triangle_has_zero_ideal():
    gi = toric_ideal(build_graph(3, [(0, 1), (1, 2), (0, 2)]))
    assert gi.generators == ()


def test_mg_hereditary_under_induced_subgraphs():
    # induced subgraphs of MG graphs stay MG
    from toricgraphs.classify import Budget, is_mg
    from toricgraphs.families import cube_plus_edge, eight_cycle_with_chord

    budget = Budget(mg_samples=40)
    rng = random.Random(12)
    fixtures = [eight_cycle_with_chord(), cube_plus_edge(), random_theta_sum(rng, 3, 2)]
    for g in fixtures:
        assert is_mg(g, budget).is_mg
        for _ in range(12):
            size = rng.randint(3, g.n - 1)
            sub = induced_subgraph(g, rng.sample(range(g.n), size)).graph
            assert is_mg(sub, budget).is_mg, (g, sub)


def test_one_clique_sum_mg_composition():
    # a 1-clique sum of bipartite MG graphs is MG; gluing a non-MG part
    # (the cube) produces a non-MG sum
    from toricgraphs.classify import Budget, is_mg
    from toricgraphs.families import cube_graph, cycle_graph
    from toricgraphs.graphs import VertexGlue

    budget = Budget(mg_samples=40)
    rng = random.Random(13)
    for _ in range(5):
        g1 = random_connected_bipartite(rng, max_edges=8)
        g2 = random_connected_bipartite(rng, max_edges=8)
        assert is_mg(g1, budget).is_mg and is_mg(g2, budget).is_mg
        s = clique_sum(g1, g2, VertexGlue(rng.randrange(g1.n), rng.randrange(g2.n)))
        assert is_mg(s.graph, budget).is_mg

    s = clique_sum(cube_graph(), cycle_graph(4), VertexGlue(0, 0))
    res = is_mg(s.graph, Budget(mg_samples=20, max_cones=10**4))
    assert not res.is_mg and res.mu == 11 and res.fan_min_size == 13


def test_mixed_two_clique_sum_mg():
    # 2-clique sum of a bipartite UMG graph with a bipartite MG graph is MG
    from toricgraphs.classify import Budget, is_mg
    from toricgraphs.families import six_cycle_with_chord

    budget = Budget(mg_samples=40)
    rng = random.Random(14)
    for _ in range(4):
        umg_part = theta_graph(rng.randint(2, 3), rng.randint(2, 3))
        mg_part = six_cycle_with_chord()
        s = clique_sum(
            umg_part,
            mg_part,
            EdgeGlue(rng.randrange(umg_part.m), rng.randrange(mg_part.m)),
        )
        assert is_mg(s.graph, budget).is_mg
