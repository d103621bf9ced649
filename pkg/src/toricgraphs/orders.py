"""Monomial orders as integer weight matrices with a lex tie-break.

An order compares exponent vectors by applying its weight rows in turn
and, if all rows tie, by a lexicographic pass over a variable
permutation.  Any order used on inhomogeneous input must be global
(1 smaller than every variable); the graded constructors below all are.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatchError

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class MonomialOrder:
    """Weight rows applied lexicographically, then a lex tie-break.

    ``tie_break`` lists variable indices from most to least significant;
    the first index where the exponents differ decides, larger exponent
    winning.  The combined comparison is a total order on monomials.
    """

    m: int
    rows: tuple[tuple[int, ...], ...]
    tie_break: tuple[int, ...]

    def __post_init__(self):
        if any(len(r) != self.m for r in self.rows) or len(self.tie_break) != self.m:
            raise DimensionMismatchError("order rows must have length m")

    def cmp_diff(self, d: Sequence[int]) -> int:
        """Sign of the comparison for a difference vector ``a - b``."""
        for row in self.rows:
            s = 0
            for r, x in zip(row, d):
                if x:
                    s += r * x
            if s:
                return 1 if s > 0 else -1
        for i in self.tie_break:
            if d[i]:
                return 1 if d[i] > 0 else -1
        return 0


def compare(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 as ``a`` is smaller than, equal to or greater than ``b``."""
    if len(a) != order.m or len(b) != order.m:
        raise DimensionMismatchError("monomial length does not match order")
    return order.cmp_diff([x - y for x, y in zip(a, b)])


def _unit(m: int, i: int, sign: int) -> tuple[int, ...]:
    row = [0] * m
    row[i] = sign
    return tuple(row)


def degrevlex(m: int, perm: Sequence[int] | None = None) -> MonomialOrder:
    """Graded reverse-lexicographic order.

    ``perm`` lists the variables from most to least significant (identity
    by default).  Ties after total degree are broken by the smallest
    exponent in the least significant variable, then the next, and so on,
    which the weight rows encode directly; the final lex pass is
    unreachable but keeps the order total by construction.
    """
    perm = tuple(perm) if perm is not None else tuple(range(m))
    rows = [tuple([1] * m)]
    for i in range(m - 1, 0, -1):
        rows.append(_unit(m, perm[i], -1))
    return MonomialOrder(m, tuple(rows), perm)


def lex(m: int, perm: Sequence[int] | None = None) -> MonomialOrder:
    """Pure lexicographic order with ``perm`` most significant first."""
    perm = tuple(perm) if perm is not None else tuple(range(m))
    return MonomialOrder(m, (), perm)


def weight_order(weights: Sequence[int], perm: Sequence[int] | None = None) -> MonomialOrder:
    """``weights`` first, refined by degrevlex; total for any weight vector."""
    m = len(weights)
    base = degrevlex(m, perm)
    return MonomialOrder(m, (tuple(weights),) + base.rows, base.tie_break)


def stacked_order(m: int, blocks: Sequence[tuple[Sequence[int], MonomialOrder]]) -> MonomialOrder:
    """Product order: compare on the first variable block, then the next.

    Each entry is ``(variables, order)`` where ``order`` is an order on
    ``len(variables)`` formal slots; its rows are scattered onto the named
    variables.  Blocks must cover all ``m`` variables between them (the
    final tie-break is the concatenation, so totality needs coverage).
    """
    rows: list[tuple[int, ...]] = []
    tie: list[int] = []
    for variables, order in blocks:
        vs = tuple(variables)
        if order.m != len(vs):
            raise DimensionMismatchError("block order size mismatch")
        for row in order.rows:
            scattered = [0] * m
            for slot, var in enumerate(vs):
                scattered[var] = row[slot]
            rows.append(tuple(scattered))
        tie.extend(vs[slot] for slot in order.tie_break)
    if sorted(tie) != list(range(m)):
        raise DimensionMismatchError("blocks must partition the variables")
    return MonomialOrder(m, tuple(rows), tuple(tie))
