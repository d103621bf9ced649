import pytest
from hypothesis import given, settings, strategies as st

from toricgraphs.binomials import (
    Binomial,
    binomial_canonical,
    buchberger,
    check_marked_reduced,
    initial_term,
    normal_form,
    s_pair,
)
from toricgraphs.errors import NotReducedError, ZeroBinomialError
from toricgraphs.orders import degrevlex, lex


def bino(plus, minus):
    return Binomial(tuple(plus), tuple(minus))


# variables x1..x9 for the 9-edge fixture: exponent vectors of length 9
def vec9(*idx):
    v = [0] * 9
    for i in idx:
        v[i - 1] += 1
    return tuple(v)


B_C1 = Binomial(vec9(1, 7, 9), vec9(2, 6, 8))  # x1x7x9 - x2x6x8
B_C2 = Binomial(vec9(3, 5), vec9(4, 9))  # x3x5 - x4x9
B_C3 = Binomial(vec9(1, 3, 5, 7), vec9(2, 4, 6, 8))  # x1x3x5x7 - x2x4x6x8


def test_initial_term():
    order = degrevlex(9)
    marked = initial_term(order, B_C2)
    assert marked.plus == vec9(3, 5)
    # marking is idempotent
    assert initial_term(order, marked) == marked
    with pytest.raises(ZeroBinomialError):
        initial_term(order, Binomial(vec9(1), vec9(1)))


def test_normal_form_long_cycle_reduces_to_zero():
    # with x3x5 and x1x7x9 marked, the 8-cycle binomial reduces to zero
    basis = [B_C2, B_C1]
    assert normal_form(B_C3, basis) is None


def test_normal_form_untouched_and_self():
    basis = [bino((1, 0, 1, 0), (0, 1, 0, 1))]
    f = bino((2, 0, 0, 0), (0, 0, 0, 2))
    assert normal_form(f, basis) == f
    assert normal_form(basis[0], basis) is None


def test_s_pair_golden():
    # g1 = x1x3 - x2x4, g2 = x3x5 - x4x9 marked on their first monomials
    g1 = Binomial(vec9(1, 3), vec9(2, 4))
    g2 = Binomial(vec9(3, 5), vec9(4, 9))
    s = s_pair(g1, g2)
    assert s == Binomial(vec9(1, 4, 9), vec9(2, 4, 5))
    assert s_pair(g1, g1) is None


def test_s_pair_coprime_reduces_to_zero():
    g1 = bino((1, 1, 0, 0, 0, 0), (0, 0, 1, 1, 0, 0))
    g2 = bino((0, 0, 0, 0, 2, 0), (0, 0, 0, 0, 0, 2))
    s = s_pair(g1, g2)
    assert s is not None
    assert normal_form(s, [g1, g2]) is None


def test_buchberger_principal():
    order = degrevlex(4)
    gb = buchberger([bino((0, 1, 0, 1), (1, 0, 1, 0))], order)
    assert len(gb) == 1
    assert gb.elements[0] == bino((1, 0, 1, 0), (0, 1, 0, 1))
    check_marked_reduced(gb.elements)


def test_buchberger_k23_three_quadrics():
    # toric ideal of K_{2,3}: 2x2 minors of a 2x3 grid x1..x6 (row-major)
    def grid(i, j):
        return i * 3 + j

    gens = []
    for j1 in range(3):
        for j2 in range(j1 + 1, 3):
            plus = [0] * 6
            minus = [0] * 6
            plus[grid(0, j1)] += 1
            plus[grid(1, j2)] += 1
            minus[grid(0, j2)] += 1
            minus[grid(1, j1)] += 1
            gens.append(bino(plus, minus))
    gb = buchberger(gens, degrevlex(6))
    assert len(gb) == 3
    check_marked_reduced(gb.elements)
    # every S-pair of the output reduces to zero
    for i in range(len(gb)):
        for j in range(i + 1, len(gb)):
            s = s_pair(gb.elements[i], gb.elements[j])
            assert s is None or normal_form(s, gb.elements) is None


def test_buchberger_grows_basis_under_lex():
    # <x0x3 - x1x2, x0x2 - x1^2> under lex: the S-pair of the two
    # generators is x1^2x3 - x1x2^2, irreducible, and the run stops there
    # (checked by hand: the remaining S-pairs reduce to zero or are coprime)
    gens = [
        bino((1, 0, 0, 1), (0, 1, 1, 0)),
        bino((1, 0, 1, 0), (0, 2, 0, 0)),
    ]
    gb = buchberger(gens, lex(4))
    assert len(gb) == 3
    assert binomial_canonical(bino((0, 2, 0, 1), (0, 1, 2, 0))) in gb.unmarked()


def test_buchberger_unique_under_permutation():
    def grid(i, j):
        return i * 3 + j

    gens = []
    for j1 in range(3):
        for j2 in range(j1 + 1, 3):
            plus = [0] * 6
            minus = [0] * 6
            plus[grid(0, j1)] += 1
            plus[grid(1, j2)] += 1
            minus[grid(0, j2)] += 1
            minus[grid(1, j1)] += 1
            gens.append(bino(plus, minus))
    order = degrevlex(6)
    base = buchberger(gens, order)
    import itertools

    for perm in itertools.permutations(gens):
        assert buchberger(list(perm), order).elements == base.elements


def test_check_marked_reduced_rejects():
    g1 = bino((2, 0, 0, 0), (0, 1, 1, 0))
    g2 = bino((2, 1, 0, 0), (0, 0, 0, 3))
    with pytest.raises(NotReducedError):
        check_marked_reduced([g1, g2])


def _sympy_reduced_gb(gens, order_name, m):
    sympy = pytest.importorskip("sympy")
    xs = sympy.symbols(f"x0:{m}")

    def poly(b):
        mono = lambda e: sympy.prod([x**k for x, k in zip(xs, e)])
        return mono(b.plus) - mono(b.minus)

    basis = sympy.groebner([poly(g) for g in gens], *xs, order=order_name)
    out = set()
    for p in basis.exprs:
        terms = sympy.Poly(p, *xs).terms()
        assert len(terms) == 2 and {c for _, c in terms} == {1, -1}
        (e1, c1), (e2, _) = terms
        plus, minus = (e1, e2) if c1 == 1 else (e2, e1)
        out.add(Binomial(tuple(map(int, plus)), tuple(map(int, minus))))
    return out


@settings(max_examples=25, deadline=None)
@given(
    st.lists(
        st.tuples(
            st.lists(st.integers(0, 2), min_size=4, max_size=4),
            st.lists(st.integers(0, 2), min_size=4, max_size=4),
        ),
        min_size=1,
        max_size=3,
    )
)
def test_buchberger_matches_sympy(raw):
    # independent oracle: sympy's groebner on the same homogeneous input
    gens = []
    for plus, minus in raw:
        dp, dm = sum(plus), sum(minus)
        plus5 = tuple(plus) + (max(dm - dp, 0),)
        minus5 = tuple(minus) + (max(dp - dm, 0),)
        if plus5 != minus5:
            gens.append(Binomial(plus5, minus5))
    if not gens:
        return
    for order, name in ((degrevlex(5), "grevlex"), (lex(5), "lex")):
        mine = {(g.plus, g.minus) for g in buchberger(gens, order).elements}
        theirs = {(g.plus, g.minus) for g in _sympy_reduced_gb(gens, name, 5)}
        assert mine == theirs


@settings(max_examples=60)
@given(
    st.lists(
        st.tuples(
            st.lists(st.integers(0, 2), min_size=4, max_size=4),
            st.lists(st.integers(0, 2), min_size=4, max_size=4),
        ),
        min_size=1,
        max_size=3,
    )
)
def test_buchberger_spairs_reduce_to_zero(raw):
    # random homogeneous binomials: pad the smaller side with a slack variable
    gens = []
    for plus, minus in raw:
        dp, dm = sum(plus), sum(minus)
        plus5 = tuple(plus) + (max(dm - dp, 0),)
        minus5 = tuple(minus) + (max(dp - dm, 0),)
        if plus5 != minus5:
            gens.append(Binomial(plus5, minus5))
    if not gens:
        return
    gb = buchberger(gens, degrevlex(5))
    check_marked_reduced(gb.elements)
    for i in range(len(gb)):
        for j in range(i + 1, len(gb)):
            s = s_pair(gb.elements[i], gb.elements[j])
            assert s is None or normal_form(s, gb.elements) is None
    # the generators lie in the ideal of the output
    for g in gens:
        assert normal_form(g, gb.elements) is None
