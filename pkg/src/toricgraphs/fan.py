"""Groebner fan of a homogeneous binomial ideal by facet-flip traversal.

Each reduced marked basis determines a full-dimensional cone of weight
vectors; crossing an irredundant facet and recomputing the basis under a
weight order taken just beyond the wall yields the unique adjacent basis.
Breadth-first traversal from the degrevlex cone visits every reduced
basis, because the fan of a homogeneous ideal is complete and its dual
graph connected.  All geometry is exact: interior points are integer
vectors carried across walls, facet tests are an integer projection with
an exact LP fallback.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .binomials import (
    Binomial,
    GroebnerBasis,
    binomial_canonical,
    buchberger,
    check_marked_reduced,
)
from .errors import (
    BadParametersError,
    FanBudgetExceededError,
    NotAFacetError,
    NotReducedError,
)
from .exactlp import feasible_point
from .orders import MonomialOrder, degrevlex

DEFAULT_CONE_CAP = 10**5

IntVec = tuple[int, ...]


def _primitive(v: Sequence[int]) -> IntVec:
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def _idot(a: Sequence[int], b: Sequence[int]) -> int:
    s = 0
    for x, y in zip(a, b):
        if x and y:
            s += x * y
    return s


def _scale_to_int(vec: Sequence[Fraction]) -> IntVec:
    denom = 1
    for f in vec:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    return _primitive(tuple(int(f * denom) for f in vec))


def cone_inequalities(gb: GroebnerBasis) -> tuple[IntVec, ...]:
    """Primitive, deduplicated inequality normals of the basis' cone."""
    return tuple(sorted({_primitive(g.support_vector()) for g in gb.elements}))


@dataclass(frozen=True)
class GroebnerCone:
    """Weight-space cone of a marked reduced basis.

    ``inequalities`` are all primitive normals, ``facets`` the irredundant
    ones; ``interior_point`` satisfies every inequality strictly (for the
    full-space cone of the zero ideal it is the origin, vacuously).
    """

    inequalities: tuple[IntVec, ...]
    facets: tuple[IntVec, ...]
    interior_point: IntVec


def _interior_point(ineqs: Sequence[IntVec], dim: int) -> Optional[IntVec]:
    if not ineqs:
        return (0,) * dim
    # cheap candidate: the sum of the normals
    cand = tuple(sum(v[j] for v in ineqs) for j in range(dim))
    if all(_idot(v, cand) > 0 for v in ineqs):
        return cand
    sol = feasible_point([], ineqs, dim)
    return None if sol is None else _scale_to_int(sol)


def _facet_point(
    v: IntVec, ineqs: Sequence[IntVec], interior: IntVec, dim: int
) -> Optional[IntVec]:
    """An integer point with ``v . w = 0`` and every other inequality
    strict, or ``None`` when the candidate supports no facet."""
    others = [u for u in ineqs if u != v]
    # fast path: project the interior point onto the candidate hyperplane
    # (scaled by v.v to stay integral)
    vv = _idot(v, v)
    vw = _idot(v, interior)
    proj = tuple(vv * w - vw * x for w, x in zip(interior, v))
    if all(_idot(u, proj) > 0 for u in others):
        return _primitive(proj)
    sol = feasible_point([v], others, dim)
    return None if sol is None else _scale_to_int(sol)


def _interior_beyond_wall(
    wall_point: IntVec, v: IntVec, ineqs: Sequence[IntVec]
) -> IntVec:
    """Integer interior point of the cone entered by crossing the wall
    with (old) normal ``v`` at ``wall_point``.

    Walks from the wall point against ``v`` by half the exact distance to
    the nearest constraint of the new cone.
    """
    num, den = 1, 1  # step t as num/den
    for u in ineqs:
        uv = _idot(u, v)
        if uv > 0:
            uw = _idot(u, wall_point)
            # candidate bound uw/uv; keep the minimum
            if uw * den < num * uv:
                num, den = uw, uv
    # t = num / (2 den): w' = 2 den wall_point - num v, integral
    point = tuple(2 * den * w - num * x for w, x in zip(wall_point, v))
    assert all(_idot(u, point) > 0 for u in ineqs)
    return _primitive(point)


def groebner_cone(gb: GroebnerBasis) -> GroebnerCone:
    """Cone of a marked reduced basis with exact facet classification."""
    check_marked_reduced(gb.elements)
    dim = gb.elements[0].m if gb.elements else 0
    ineqs = cone_inequalities(gb)
    interior = _interior_point(ineqs, dim)
    if interior is None:
        raise NotReducedError("cone has empty interior; marking is inconsistent")
    facets = tuple(
        v for v in ineqs if _facet_point(v, ineqs, interior, dim) is not None
    )
    return GroebnerCone(ineqs, facets, interior)


def _flip_order(facet: IntVec, w: IntVec, m: int) -> MonomialOrder:
    neg = tuple(-x for x in facet)
    base = degrevlex(m)
    return MonomialOrder(m, (w, neg) + base.rows, base.tie_break)


def flip(gb: GroebnerBasis, facet: IntVec) -> GroebnerBasis:
    """The unique reduced basis adjacent across ``facet``.

    Takes a weight in the facet's relative interior and recomputes the
    reduced basis under that weight pushed infinitesimally to the far
    side; by fan completeness that lands in the adjacent cone.
    """
    dim = gb.elements[0].m if gb.elements else 0
    ineqs = cone_inequalities(gb)
    if facet not in ineqs:
        raise NotAFacetError(f"{facet} is not an inequality of this cone")
    interior = _interior_point(ineqs, dim)
    assert interior is not None
    w = _facet_point(facet, ineqs, interior, dim)
    if w is None:
        raise NotAFacetError(f"{facet} is redundant for this cone")
    neighbor = buchberger(gb.elements, _flip_order(facet, w, dim))
    assert neighbor.key != gb.key, "flip failed to leave the cone"
    return neighbor


def _check_homogeneous(gens: Iterable[Binomial]) -> None:
    for g in gens:
        if sum(g.plus) != sum(g.minus):
            raise BadParametersError(
                "fan traversal requires generators homogeneous in total degree"
            )


@dataclass
class FanResult:
    """Outcome of a fan traversal.

    ``bases`` in discovery order; ``cones`` aligned with the prefix of
    ``bases`` that was fully expanded; ``adjacency`` maps a basis key to
    its neighbor keys.  ``complete`` is False when an early-stop
    condition ended the walk (cones and adjacency are then partial).
    """

    bases: tuple[GroebnerBasis, ...]
    cones: tuple[GroebnerCone, ...]
    adjacency: dict[tuple[Binomial, ...], tuple[tuple[Binomial, ...], ...]]
    complete: bool

    def __len__(self) -> int:
        return len(self.bases)

    def size_range(self) -> tuple[int, int]:
        sizes = [len(b) for b in self.bases]
        return min(sizes), max(sizes)


def enumerate_reduced_gbs(
    gens: Sequence[Binomial],
    max_cones: int = DEFAULT_CONE_CAP,
    early_stop_size: Optional[int] = None,
) -> FanResult:
    """Every reduced Groebner basis of the homogeneous ideal ``<gens>``.

    Breadth-first flip traversal from the degrevlex basis.  With
    ``early_stop_size`` the walk returns as soon as it sees a basis that
    small (used by witness searches); the result is then marked
    incomplete.  Raises ``FanBudgetExceededError`` beyond ``max_cones``.
    """
    _check_homogeneous(gens)
    m = gens[0].m if gens else 0
    start = buchberger(gens, degrevlex(m))
    if not start.elements:
        cone = GroebnerCone((), (), (0,) * m)
        return FanResult((start,), (cone,), {(): ()}, True)

    if early_stop_size is not None and len(start) <= early_stop_size:
        return FanResult((start,), (), {}, False)

    start_interior = _interior_point(cone_inequalities(start), m)
    assert start_interior is not None

    bases: list[GroebnerBasis] = [start]
    cones: list[GroebnerCone] = []
    adjacency: dict[tuple[Binomial, ...], tuple[tuple[Binomial, ...], ...]] = {}
    visited: set[tuple[Binomial, ...]] = {start.key}
    queue: list[tuple[GroebnerBasis, IntVec]] = [(start, start_interior)]

    head = 0
    while head < len(queue):
        gb, interior = queue[head]
        head += 1
        ineqs = cone_inequalities(gb)
        facets = []
        arrivals = []  # (neighbor, its interior point)
        for v in ineqs:
            w = _facet_point(v, ineqs, interior, m)
            if w is None:
                continue
            facets.append(v)
            nb = buchberger(gb.elements, _flip_order(v, w, m))
            assert nb.key != gb.key, "flip failed to leave the cone"
            arrivals.append((nb, w, v))
        cones.append(GroebnerCone(ineqs, tuple(facets), interior))
        adjacency[gb.key] = tuple(nb.key for nb, _, _ in arrivals)
        for nb, w, v in arrivals:
            if nb.key in visited:
                continue
            if len(visited) >= max_cones:
                raise FanBudgetExceededError(
                    f"fan traversal exceeded {max_cones} cones",
                    partial=len(visited),
                )
            visited.add(nb.key)
            bases.append(nb)
            nb_interior = _interior_beyond_wall(w, v, cone_inequalities(nb))
            queue.append((nb, nb_interior))
            if early_stop_size is not None and len(nb) <= early_stop_size:
                return FanResult(tuple(bases), tuple(cones), adjacency, False)
    return FanResult(tuple(bases), tuple(cones), adjacency, True)


def universal_gb(
    gens: Sequence[Binomial], max_cones: int = DEFAULT_CONE_CAP
) -> frozenset[Binomial]:
    """Union of all reduced bases, sign-normalized and unmarked."""
    result = enumerate_reduced_gbs(gens, max_cones=max_cones)
    out: set[Binomial] = set()
    for gb in result.bases:
        out.update(binomial_canonical(g) for g in gb.elements)
    return frozenset(out)


def gb_size_range(
    gens: Sequence[Binomial], max_cones: int = DEFAULT_CONE_CAP
) -> tuple[int, int]:
    """Smallest and largest cardinality over all reduced bases."""
    return enumerate_reduced_gbs(gens, max_cones=max_cones).size_range()
