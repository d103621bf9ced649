import pytest

from toricgraphs.binomials import Binomial, binomial_canonical, normal_form
from toricgraphs.errors import NotBipartiteError, OddWalkError
from toricgraphs.families import (
    cube_graph,
    cycle_graph,
    eight_cycle_with_chord,
    six_cycle_with_chord,
    walk_fixture_crossing_no_f4,
    walk_fixture_even_chord,
    walk_fixture_f4,
)
from toricgraphs.fan import universal_gb
from toricgraphs.graphs import build_graph, theta_graph, walk_from_vertices
from toricgraphs.ideals import (
    CROSSING_WITHOUT_F4,
    EVEN_CHORD,
    cycle_binomial,
    find_walk_for_binomial,
    incidence_matrix,
    minimality_screen,
    markov_basis_bipartite,
    toric_ideal,
    universal_gb_bipartite,
    universal_markov_basis,
    walk_binomial,
)
from toricgraphs.lattice import is_minimal_binomial, minimal_generators


def vec(m, *idx):
    v = [0] * m
    for i in idx:
        v[i - 1] += 1
    return tuple(v)


def bino(m, plus_vars, minus_vars):
    return Binomial(vec(m, *plus_vars), vec(m, *minus_vars))


# the three cycle binomials of the 9-edge fixture, in variables x1..x9
B_C1 = bino(9, (1, 7, 9), (2, 6, 8))
B_C2 = bino(9, (3, 5), (4, 9))
B_C3 = bino(9, (1, 3, 5, 7), (2, 4, 6, 8))


def test_incidence_matrix():
    g = cycle_graph(4)
    A = incidence_matrix(g)
    assert all(sum(col) == 2 for col in A.columns)
    g = eight_cycle_with_chord()
    A = incidence_matrix(g)
    assert A.columns[8] == (0, 0, 1, 0, 0, 1, 0, 0)


def test_walk_binomials_of_fixture_cycles():
    g = eight_cycle_with_chord()
    w1 = walk_from_vertices(g, [0, 1, 2, 5, 6, 7, 0])
    assert binomial_canonical(walk_binomial(w1, g.m)) == binomial_canonical(B_C1)
    w2 = walk_from_vertices(g, [2, 3, 4, 5, 2])
    assert binomial_canonical(walk_binomial(w2, g.m)) == binomial_canonical(B_C2)
    w3 = walk_from_vertices(g, list(range(8)) + [0])
    assert binomial_canonical(walk_binomial(w3, g.m)) == binomial_canonical(B_C3)


def test_walk_fixture_binomials():
    # the bridge-doubling walk: x1x3x5x7x9 - x2x4^2x6x8
    g, w = walk_fixture_even_chord()
    b = walk_binomial(w, g.m)
    assert b == Binomial(
        (1, 0, 1, 0, 1, 0, 1, 0, 1, 0), (0, 1, 0, 2, 0, 1, 0, 1, 0, 0)
    )
    # the two cycle fixtures alternate cleanly
    g2, w2 = walk_fixture_crossing_no_f4()
    assert walk_binomial(w2, g2.m) == Binomial(
        (1, 0, 1, 0, 1, 0, 1, 0, 0, 0), (0, 1, 0, 1, 0, 1, 0, 1, 0, 0)
    )


def test_walk_binomial_zero_and_odd():
    k3 = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    doubled = walk_from_vertices(k3, [0, 1, 2, 0, 1, 2, 0])
    assert walk_binomial(doubled, 3) is None
    with pytest.raises(OddWalkError):
        walk_binomial(walk_from_vertices(k3, [0, 1, 2, 0]), 3)


def test_toric_ideal_forest_and_cycle():
    assert toric_ideal(build_graph(4, [(0, 1), (1, 2), (2, 3)])).generators == ()
    gi = toric_ideal(cycle_graph(4))
    assert len(gi.generators) == 1
    assert gi.generators[0].degree == 2


def test_markov_basis_bipartite_fixture():
    g = eight_cycle_with_chord()
    markov = markov_basis_bipartite(g)
    assert set(markov) == {binomial_canonical(B_C1), binomial_canonical(B_C2)}
    uni = universal_gb_bipartite(g)
    assert set(uni) == {
        binomial_canonical(B_C1),
        binomial_canonical(B_C2),
        binomial_canonical(B_C3),
    }


def test_markov_basis_bipartite_small_cases():
    assert len(markov_basis_bipartite(cycle_graph(6))) == 1
    assert len(markov_basis_bipartite(theta_graph(3, 2))) == 3
    with pytest.raises(NotBipartiteError):
        markov_basis_bipartite(build_graph(3, [(0, 1), (1, 2), (0, 2)]))


def test_bipartite_markov_equals_fiber_method():
    for g in (eight_cycle_with_chord(), six_cycle_with_chord(), theta_graph(3, 3)):
        gi = toric_ideal(g)
        res = minimal_generators(gi.generators, gi.A)
        markov = markov_basis_bipartite(g)
        assert res.mu == len(markov)
        # same ideal: mutual membership
        gb = gi.groebner()
        assert all(normal_form(b, gb.elements) is None for b in markov)

def test_minimality_of_fixture_binomials():
    gi = toric_ideal(eight_cycle_with_chord())
    assert is_minimal_binomial(B_C1, gi.generators, gi.A)
    assert is_minimal_binomial(B_C2, gi.generators, gi.A)
    assert not is_minimal_binomial(B_C3, gi.generators, gi.A)


def test_universal_markov_basis_fixture():
    gi = toric_ideal(eight_cycle_with_chord())
    umb = universal_markov_basis(gi)
    assert set(umb) == {binomial_canonical(B_C1), binomial_canonical(B_C2)}
    # and it agrees with the bipartite description
    assert set(umb) == set(markov_basis_bipartite(gi.graph))


def test_universal_markov_contains_minimal_cycle_binomial():
    g, w = walk_fixture_f4()
    gi = toric_ideal(g)
    b = binomial_canonical(walk_binomial(w, g.m))
    uni = universal_gb(gi.generators)
    umb = universal_markov_basis(gi, universal=sorted(uni))
    assert b in umb


def test_minimality_screen_fixtures():
    g1, w1 = walk_fixture_even_chord()
    res = minimality_screen(w1, g1)
    assert not res and res.reason == EVEN_CHORD and res.witness == (9,)

    g2, w2 = walk_fixture_crossing_no_f4()
    res = minimality_screen(w2, g2)
    assert not res and res.reason == CROSSING_WITHOUT_F4
    assert set(res.witness) == {8, 9}

    g3, w3 = walk_fixture_f4()
    assert minimality_screen(w3, g3)


def test_fixture_nonminimal_walk_binomials():
    # the two failing walks yield non-minimal binomials, the passing one
    # yields a minimal binomial
    for fixture, expected in (
        (walk_fixture_even_chord, False),
        (walk_fixture_crossing_no_f4, False),
        (walk_fixture_f4, True),
    ):
        g, w = fixture()
        gi = toric_ideal(g)
        b = walk_binomial(w, g.m)
        assert is_minimal_binomial(b, gi.generators, gi.A) is expected


def test_find_walk_for_binomial():
    g = eight_cycle_with_chord()
    w = find_walk_for_binomial(g, B_C2)
    assert w is not None
    assert binomial_canonical(walk_binomial(w, g.m)) == binomial_canonical(B_C2)
    # an element not in any walk support
    assert find_walk_for_binomial(g, bino(9, (1,), (2,)), max_len=4) is None


def test_cube_markov_basis_is_paper_shape():
    gi = toric_ideal(cube_graph())
    res = minimal_generators(gi.generators, gi.A)
    assert res.mu == 10
    degs = sorted(b.degree for b in res.markov)
    assert degs == [2] * 6 + [3] * 4
