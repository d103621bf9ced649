"""Lattice ideals, saturation, fibers and graded minimal generators.

The grading is by a nonnegative integer matrix ``A`` with no zero column
(a pointed grading), so every fiber ``{u >= 0 : Au = d}`` is finite.  The
number of minimal generators of the toric ideal in degree ``d`` is one
less than the number of connected components of the fiber graph whose
edges join monomials sharing a variable: differences inside a component
are exactly the degree-``d`` elements of ``<x_1..x_m> * I``, which is the
graded Nakayama criterion in combinatorial form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .binomials import (
    Binomial,
    GroebnerBasis,
    binomial_canonical,
    buchberger,
    canonical_key,
    normal_form,
)
from .errors import (
    BadParametersError,
    FiberBudgetExceededError,
    NotInIdealError,
)
from .orders import Monomial, degrevlex

DEFAULT_FIBER_CAP = 10**5


@dataclass(frozen=True)
class GradingMatrix:
    """Columns are the degrees of the variables: ``deg(x_j) = A[:, j]``."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = self.m
        for j in range(m):
            if all(row[j] == 0 for row in self.rows):
                raise BadParametersError(f"zero column {j}: grading not pointed")
        if any(x < 0 for row in self.rows for x in row):
            raise BadParametersError("grading entries must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def degree(self, mon: Monomial) -> tuple[int, ...]:
        return tuple(
            sum(row[j] * mon[j] for j in range(self.m) if mon[j]) for row in self.rows
        )

    @cached_property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(row[j] for row in self.rows) for j in range(self.m))


def integer_kernel(rows: Sequence[Sequence[int]], m: int) -> tuple[tuple[int, ...], ...]:
    """Basis of ``{u in Z^m : A u = 0}`` by integer row reduction.

    Row-reduces the transpose augmented with an identity using exact
    Euclidean column... row operations; the identity rows aligned with the
    zero rows of the reduced transpose form the kernel basis.  The kernel
    of an integer matrix is automatically a saturated lattice.
    """
    n = len(rows)
    # work rows: [A^T | I_m]
    work = [[rows[i][j] for i in range(n)] + [int(k == j) for k in range(m)]
            for j in range(m)]
    pivot_row = 0
    for col in range(n):
        # find a nonzero entry on/below pivot_row, reduce column by gcds
        while True:
            nz = [r for r in range(pivot_row, m) if work[r][col] != 0]
            if not nz:
                break
            r0 = min(nz, key=lambda r: abs(work[r][col]))
            work[pivot_row], work[r0] = work[r0], work[pivot_row]
            done = True
            for r in range(pivot_row + 1, m):
                if work[r][col]:
                    q = work[r][col] // work[pivot_row][col]
                    work[r] = [a - q * b for a, b in zip(work[r], work[pivot_row])]
                    if work[r][col]:
                        done = False
            if done:
                pivot_row += 1
                break
    kernel = [tuple(row[n:]) for row in work[pivot_row:]]
    return tuple(kernel)


def lattice_ideal_generators(basis: Iterable[Sequence[int]]) -> list[Binomial]:
    """Binomial ``x^{u+} - x^{u-}`` for each lattice vector ``u``."""
    out = []
    for u in basis:
        plus = tuple(x if x > 0 else 0 for x in u)
        minus = tuple(-x if x < 0 else 0 for x in u)
        if plus != minus:
            out.append(Binomial(plus, minus))
    return out


def _strip_variable(b: Binomial, j: int) -> Binomial:
    t = min(b.plus[j], b.minus[j])
    if t == 0:
        return b
    plus = list(b.plus)
    minus = list(b.minus)
    plus[j] -= t
    minus[j] -= t
    return Binomial(tuple(plus), tuple(minus))


def saturate(gens: Sequence[Binomial]) -> list[Binomial]:
    """Generators of ``(<gens> : (x_1 ... x_m)^inf)``.

    One variable at a time: compute a reduced basis under a graded
    reverse-lex order with that variable cheapest, then divide each
    element by the largest power of the variable dividing it.  A full
    pass over the variables already yields the saturation; the loop
    repeats until nothing changes as a cheap self-check.
    """
    gens = [g for g in gens if g.plus != g.minus]
    if not gens:
        return []
    m = gens[0].m
    current = list(gens)
    while True:
        before = {binomial_canonical(g) for g in current}
        for j in range(m):
            perm = [i for i in range(m) if i != j] + [j]
            gb = buchberger(current, degrevlex(m, perm))
            current = [_strip_variable(g, j) for g in gb.elements]
        after = {binomial_canonical(g) for g in current}
        if after == before:
            return sorted(
                after, key=lambda g: (canonical_key(g.plus), canonical_key(g.minus))
            )


def fiber(
    A: GradingMatrix, d: Sequence[int], max_size: int = DEFAULT_FIBER_CAP
) -> tuple[Monomial, ...]:
    """All monomials ``u >= 0`` with ``A u = d``, in lexicographic order."""
    if any(x < 0 for x in d):
        raise BadParametersError("degree must be nonnegative")
    m = A.m
    cols = A.columns
    out: list[Monomial] = []

    def rec(j: int, remaining: list[int], prefix: list[int]) -> None:
        if j == m:
            if all(x == 0 for x in remaining):
                if len(out) >= max_size:
                    raise FiberBudgetExceededError(
                        f"fiber larger than {max_size}", partial=len(out)
                    )
                out.append(tuple(prefix))
            return
        col = cols[j]
        # largest exponent of x_j compatible with the remaining degree
        cap = None
        for a, r in zip(col, remaining):
            if a > 0:
                c = r // a
                cap = c if cap is None else min(cap, c)
        if cap is None:  # zero column cannot happen (pointed grading)
            cap = 0
        for t in range(cap, -1, -1):
            rec(
                j + 1,
                [r - t * a for r, a in zip(remaining, col)],
                prefix + [t],
            )

    rec(0, list(d), [])
    out.sort()
    return tuple(out)


def _fiber_components(fib: Sequence[Monomial]) -> list[list[int]]:
    """Connected components of the share-a-variable graph on a fiber."""
    k = len(fib)
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    m = len(fib[0]) if k else 0
    for j in range(m):
        touching = [i for i in range(k) if fib[i][j] > 0]
        for a, b in zip(touching, touching[1:]):
            union(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda grp: fib[grp[0]])


@dataclass(frozen=True)
class MinimalGenerators:
    mu: int
    markov: tuple[Binomial, ...]
    by_degree: tuple[tuple[tuple[int, ...], int], ...]  # (A-degree, count)


def minimal_generators(
    gens: Sequence[Binomial],
    A: GradingMatrix,
    max_fiber: int = DEFAULT_FIBER_CAP,
    groebner: Optional[GroebnerBasis] = None,
) -> MinimalGenerators:
    """Count and pick minimal binomial generators of a saturated toric ideal.

    Candidate degrees are the A-degrees of one reduced Groebner basis
    (every minimal generating degree shows up in every basis).  In each
    degree the count is (number of fiber components minus one) and the
    chosen generators connect the component representatives star-fashion.
    """
    gens = [g for g in gens if g.plus != g.minus]
    if not gens:
        return MinimalGenerators(0, (), ())
    if groebner is None:
        groebner = buchberger(gens, degrevlex(gens[0].m))
    degrees = sorted(
        {A.degree(g.plus) for g in groebner.elements},
        key=lambda d: (sum(d), d),
    )
    total = 0
    markov: list[Binomial] = []
    by_degree = []
    for d in degrees:
        fib = fiber(A, d, max_size=max_fiber)
        comps = _fiber_components(fib)
        if len(comps) <= 1:
            continue
        total += len(comps) - 1
        by_degree.append((d, len(comps) - 1))
        root = fib[comps[0][0]]
        for grp in comps[1:]:
            markov.append(binomial_canonical(Binomial(root, fib[grp[0]])))
    markov.sort(key=lambda g: (canonical_key(g.plus), canonical_key(g.minus)))
    return MinimalGenerators(total, tuple(markov), tuple(by_degree))


def is_minimal_binomial(
    b: Binomial,
    gens: Sequence[Binomial],
    A: GradingMatrix,
    max_fiber: int = DEFAULT_FIBER_CAP,
    groebner: Optional[GroebnerBasis] = None,
) -> bool:
    """True iff ``b`` belongs to some minimal generating set of the ideal.

    Decided on the fiber of ``deg_A(b)``: minimal exactly when the two
    monomials of ``b`` fall in different share-a-variable components.
    Raises ``NotInIdealError`` when ``b`` is not in the ideal at all.
    """
    gens = [g for g in gens if g.plus != g.minus]
    if b.plus == b.minus:
        raise NotInIdealError("zero binomial")
    if not gens:
        raise NotInIdealError("the zero ideal has no nonzero elements")
    if groebner is None:
        groebner = buchberger(gens, degrevlex(gens[0].m))
    if A.degree(b.plus) != A.degree(b.minus) or normal_form(b, groebner.elements) is not None:
        raise NotInIdealError(f"{b} is not in the ideal")
    fib = fiber(A, A.degree(b.plus), max_size=max_fiber)
    comps = _fiber_components(fib)
    where = {}
    for ci, grp in enumerate(comps):
        for i in grp:
            where[fib[i]] = ci
    return where[b.plus] != where[b.minus]
