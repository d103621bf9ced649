"""From graphs to toric ideals: walk binomials, exact generators, bases.

The toric ideal of a graph lives in one variable per edge (edge ``i`` is
``x_{i+1}``) graded by the vertex-edge incidence matrix.  Generators are
computed from the incidence kernel and saturated, which is exact for any
graph; for bipartite graphs the chordless-cycle description is available
directly and doubles as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .binomials import (
    Binomial,
    GroebnerBasis,
    binomial_canonical,
    buchberger,
    canonical_key,
    normal_form,
)
from .errors import NotBipartiteError, OddWalkError
from .graphs import (
    Cycle,
    Graph,
    Walk,
    classify_chords,
    enumerate_chordless_cycles,
    enumerate_cycles,
    enumerate_even_closed_walks,
    is_bipartite,
)
from .lattice import (
    GradingMatrix,
    integer_kernel,
    is_minimal_binomial,
    lattice_ideal_generators,
    saturate,
)
from .orders import degrevlex


def incidence_matrix(g: Graph) -> GradingMatrix:
    """Vertex-edge incidence: column ``e`` has ones at ``e``'s endpoints."""
    rows = [[0] * g.m for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        rows[u][e] = 1
        rows[v][e] = 1
    return GradingMatrix(tuple(tuple(r) for r in rows))


def walk_binomial(w: Walk, m: int) -> Optional[Binomial]:
    """Binomial of an even closed walk: odd-position edges minus even.

    Positions count from 1 along the walk; ``None`` when both products
    agree (for example a doubled cycle).
    """
    if not w.is_closed or not w.is_even:
        raise OddWalkError("walk binomials need an even closed walk")
    plus = [0] * m
    minus = [0] * m
    for pos, e in enumerate(w.edge_indices, start=1):
        (plus if pos % 2 == 1 else minus)[e] += 1
    if plus == minus:
        return None
    return Binomial(tuple(plus), tuple(minus))


def cycle_binomial(c: Cycle, m: int) -> Binomial:
    """Walk binomial of a cycle, sign-normalized; never zero since a cycle
    repeats no edge."""
    b = walk_binomial(c.as_walk(), m)
    assert b is not None
    return binomial_canonical(b)


@dataclass
class GraphIdeal:
    """A graph together with exact generators of its toric ideal."""

    graph: Graph
    A: GradingMatrix
    generators: tuple[Binomial, ...]
    _gb: Optional[GroebnerBasis] = field(default=None, repr=False)

    @property
    def m(self) -> int:
        return self.graph.m

    def groebner(self) -> GroebnerBasis:
        """Degrevlex Groebner basis, computed once and cached."""
        if self._gb is None:
            self._gb = buchberger(self.generators, degrevlex(self.m))
        return self._gb

    def contains(self, b: Binomial) -> bool:
        return normal_form(b, self.groebner().elements) is None


def toric_ideal(g: Graph) -> GraphIdeal:
    """Exact toric ideal of ``g``: incidence kernel, then saturation."""
    A = incidence_matrix(g)
    if g.m == 0:
        return GraphIdeal(g, A, ())
    kern = integer_kernel([list(r) for r in A.rows], g.m)
    gens = saturate(lattice_ideal_generators(kern))
    return GraphIdeal(g, A, tuple(gens))


def markov_basis_bipartite(g: Graph, max_cycles: int = 10**6) -> tuple[Binomial, ...]:
    """The unique minimal generating set of a bipartite graph's toric
    ideal: one binomial per chordless cycle."""
    if is_bipartite(g) is None:
        raise NotBipartiteError("graph is not bipartite")
    out = [cycle_binomial(c, g.m) for c in enumerate_chordless_cycles(g, max_cycles)]
    return tuple(sorted(out, key=lambda b: (canonical_key(b.plus), canonical_key(b.minus))))


def universal_gb_bipartite(g: Graph, max_cycles: int = 10**6) -> tuple[Binomial, ...]:
    """Universal Groebner basis of a bipartite graph's toric ideal: one
    binomial per cycle."""
    if is_bipartite(g) is None:
        raise NotBipartiteError("graph is not bipartite")
    out = [cycle_binomial(c, g.m) for c in enumerate_cycles(g, max_cycles=max_cycles)]
    return tuple(sorted(out, key=lambda b: (canonical_key(b.plus), canonical_key(b.minus))))


def universal_markov_basis(
    gi: GraphIdeal, universal: Optional[Sequence[Binomial]] = None
) -> tuple[Binomial, ...]:
    """Union of all Markov bases: the minimal binomials of the universal
    Groebner basis.

    For graph ideals every minimal binomial appears in some reduced
    Groebner basis, so filtering the universal basis is exhaustive.
    ``universal`` can be supplied to reuse a fan enumeration.
    """
    if universal is None:
        from .fan import universal_gb

        universal = sorted(
            universal_gb(gi.generators),
            key=lambda b: (canonical_key(b.plus), canonical_key(b.minus)),
        )
    gb = gi.groebner()
    out = [
        b
        for b in universal
        if is_minimal_binomial(b, gi.generators, gi.A, groebner=gb)
    ]
    return tuple(sorted(out, key=lambda b: (canonical_key(b.plus), canonical_key(b.minus))))


@dataclass(frozen=True)
class ScreenResult:
    passed: bool
    reason: Optional[str] = None
    witness: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.passed


EVEN_CHORD = "even-chord"
CROSSING_WITHOUT_F4 = "crossing-without-f4"


def minimality_screen(w: Walk, g: Graph) -> ScreenResult:
    """Necessary test for ``walk_binomial(w)`` to be a minimal binomial.

    Fails when the walk has a chord that is not odd, or two odd chords
    that cross effectively without completing a 4-cycle with walk edges.
    Passing says nothing by itself; sufficiency is the fiber method's job.
    """
    reports = classify_chords(w, g)
    for r in reports:
        if r.parity != "odd" or not r.same_block:
            return ScreenResult(False, EVEN_CHORD, (r.chord,))
    for r in reports:
        bad = tuple(c for c in r.crosses_with if c not in r.f4_partners)
        if bad:
            return ScreenResult(False, CROSSING_WITHOUT_F4, (r.chord,) + bad)
    return ScreenResult(True)


def find_walk_for_binomial(
    g: Graph, b: Binomial, max_len: Optional[int] = None, max_walks: int = 10**6
) -> Optional[Walk]:
    """Search for an even closed walk whose binomial matches ``b`` up to sign.

    Exhaustive over walk length (bounded by the binomial's degree), so it
    is meant for fixtures and tests rather than production paths.
    """
    target = binomial_canonical(b)
    if max_len is None:
        max_len = sum(b.plus) + sum(b.minus)
    for w in enumerate_even_closed_walks(g, max_len, max_walks=max_walks):
        wb = walk_binomial(w, g.m)
        if wb is not None and binomial_canonical(wb) == target:
            return w
    return None
