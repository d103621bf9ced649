"""Pure-difference binomials and a binomial Buchberger engine.

Everything is exact: monomials are tuples of Python ints, binomials are
pairs of monomials with an implicit coefficient pattern ``+1/-1``, and
reduced Groebner bases come out marked (initial monomial in the ``plus``
slot) and canonically sorted, so that equality of bases is equality of
tuples.  Zero binomials are represented by ``None`` everywhere.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import NotReducedError, ZeroBinomialError
from .orders import Monomial, MonomialOrder, compare


class Binomial(NamedTuple):
    """The difference ``x^plus - x^minus``.

    In marked contexts (Groebner bases) ``plus`` is the initial monomial.
    """

    plus: Monomial
    minus: Monomial

    @property
    def m(self) -> int:
        return len(self.plus)

    @property
    def degree(self) -> int:
        return sum(self.plus)

    def support_vector(self) -> tuple[int, ...]:
        """Exponent difference ``plus - minus``."""
        return tuple(p - q for p, q in zip(self.plus, self.minus))

    def flipped(self) -> "Binomial":
        return Binomial(self.minus, self.plus)


def m_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def m_divides(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def m_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def m_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x < y else y for x, y in zip(a, b))


def m_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def m_one(m: int) -> Monomial:
    return (0,) * m


def canonical_key(mon: Monomial) -> tuple:
    """Sort key that is ascending in the degrevlex order."""
    return (sum(mon), tuple(-e for e in reversed(mon)))


def binomial_canonical(b: Binomial) -> Binomial:
    """Sign-normalize: the degrevlex-larger monomial goes to ``plus``."""
    return b if canonical_key(b.plus) >= canonical_key(b.minus) else b.flipped()


def initial_term(order: MonomialOrder, f: Binomial) -> Binomial:
    """Mark ``f``: put the order-larger monomial in the ``plus`` slot."""
    c = compare(order, f.plus, f.minus)
    if c == 0:
        raise ZeroBinomialError("cannot mark a zero binomial")
    return f if c > 0 else f.flipped()


def s_pair(g1: Binomial, g2: Binomial) -> Optional[Binomial]:
    """S-binomial ``(lcm/in1)*g1 - (lcm/in2)*g2`` of two marked binomials.

    Returns ``None`` when the two monomials coincide (the S-polynomial is
    zero), in particular when ``g1 == g2``.
    """
    lcm = m_lcm(g1.plus, g2.plus)
    a = m_mul(tuple(l - p for l, p in zip(lcm, g1.plus)), g1.minus)
    b = m_mul(tuple(l - p for l, p in zip(lcm, g2.plus)), g2.minus)
    if a == b:
        return None
    # (lcm - a) - (lcm - b) = b - a
    return Binomial(b, a)


def reduce_monomial(mon: Monomial, basis: Sequence[Binomial]) -> Monomial:
    """Normal form of a monomial modulo a marked binomial family.

    Repeatedly replaces the monomial through the first applicable rule.
    Terminates whenever the markings are compatible with some order, and
    for a marked reduced basis the result is the unique normal form.
    """
    changed = True
    while changed:
        changed = False
        for lead, tail in basis:
            ok = True
            for x, y in zip(lead, mon):
                if x > y:
                    ok = False
                    break
            if ok:
                mon = tuple(x - p + q for x, p, q in zip(mon, lead, tail))
                changed = True
                break
    return mon


def normal_form(f: Binomial, basis: Sequence[Binomial]) -> Optional[Binomial]:
    """Fully reduce both monomials of ``f``; ``None`` when they meet.

    Against a marked reduced Groebner basis this is the unique normal
    form, and it is ``None`` exactly when ``f`` lies in the ideal.
    """
    a = reduce_monomial(f.plus, basis)
    b = reduce_monomial(f.minus, basis)
    if a == b:
        return None
    return Binomial(a, b)


@dataclass(frozen=True)
class GroebnerBasis:
    """A marked reduced Groebner basis in canonical sorted form.

    Two bases of the same ideal under the same order compare equal as
    values; ``elements`` doubles as a dictionary key for fan traversal.
    The producing order is carried along for convenience but does not
    take part in comparisons (a basis is identified by its marking).
    """

    elements: tuple[Binomial, ...]
    order: Optional[MonomialOrder] = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def key(self) -> tuple[Binomial, ...]:
        return self.elements

    def unmarked(self) -> frozenset[Binomial]:
        """The underlying binomials, sign-normalized, as a set."""
        return frozenset(binomial_canonical(g) for g in self.elements)


def _sorted_elements(elements: Iterable[Binomial]) -> tuple[Binomial, ...]:
    return tuple(
        sorted(elements, key=lambda g: (canonical_key(g.plus), canonical_key(g.minus)))
    )


def check_marked_reduced(elements: Sequence[Binomial]) -> None:
    """Raise ``NotReducedError`` unless no marked monomial divides any other
    monomial of the family (the defining property of a reduced basis)."""
    for i, g in enumerate(elements):
        for j, h in enumerate(elements):
            if i != j and (
                m_divides(g.plus, h.plus) or m_divides(g.plus, h.minus)
            ):
                raise NotReducedError(f"marked monomial of {g} divides part of {h}")
        if m_divides(g.plus, g.minus):
            raise NotReducedError(f"{g} is self-reducible")


def buchberger(
    gens: Iterable[Binomial], order: MonomialOrder
) -> GroebnerBasis:
    """Reduced marked Groebner basis of the binomial ideal ``<gens>``.

    Classic Buchberger with normal pair selection (by lcm degree) and the
    coprimality criterion, followed by minimalization and tail
    interreduction.  Input binomials must generate a homogeneous ideal
    under some positive grading, which guarantees termination for the
    weight orders used in this package; zero generators are skipped.
    """
    basis: list[Binomial] = []
    pairs: list[tuple[int, int, int, int]] = []  # (lcm degree, tiebreak, i, j)
    counter = 0

    def push_pairs(j: int) -> None:
        nonlocal counter
        gj = basis[j]
        for i in range(j):
            gi = basis[i]
            if m_coprime(gi.plus, gj.plus):
                continue
            lcm = m_lcm(gi.plus, gj.plus)
            counter += 1
            heapq.heappush(pairs, (sum(lcm), counter, i, j))

    for f in gens:
        if f.plus == f.minus:
            continue
        g = initial_term(order, f)
        red = normal_form(g, basis)
        if red is None:
            continue
        basis.append(initial_term(order, red))
        push_pairs(len(basis) - 1)

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        s = s_pair(basis[i], basis[j])
        if s is None:
            continue
        red = normal_form(s, basis)
        if red is None:
            continue
        basis.append(initial_term(order, red))
        push_pairs(len(basis) - 1)

    # minimalize: keep only elements whose lead is a minimal generator of
    # the initial ideal
    leads = [g.plus for g in basis]
    keep = []
    for i, g in enumerate(basis):
        if any(
            j != i and m_divides(leads[j], leads[i])
            and (leads[j] != leads[i] or j < i)
            for j in range(len(basis))
        ):
            continue
        keep.append(g)

    # interreduce tails against the final minimal basis
    final = []
    for g in keep:
        others = [h for h in keep if h is not g]
        tail = reduce_monomial(g.minus, others)
        final.append(Binomial(g.plus, tail))

    return GroebnerBasis(_sorted_elements(final), order)
