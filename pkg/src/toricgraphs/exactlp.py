"""Exact rational feasibility for small cone problems.

Solves systems ``E x = 0``, ``A x >= 1`` with a two-phase simplex using
Bland's rule.  The tableau uses fraction-free integer pivoting (every
entry stays an exact integer, uniformly scaled row set), so the answer is
exact and fast for the tiny systems cone geometry produces.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Vector = Sequence[int]


def _pivot(T: list[list[int]], basis: list[int], r: int, c: int, prev: int) -> int:
    """Integer pivot: keeps ``T`` equal to the rational tableau times a
    positive scalar; all divisions are exact."""
    piv = T[r][c]
    prow = T[r]
    for i in range(len(T)):
        if i == r:
            continue
        row = T[i]
        f = row[c]
        if f:
            T[i] = [(a * piv - f * b) // prev for a, b in zip(row, prow)]
        else:
            T[i] = [(a * piv) // prev for a in row]
    basis[r] = c
    return piv


def feasible_point(
    equalities: Sequence[Vector], inequalities: Sequence[Vector], dim: int
) -> Optional[list[Fraction]]:
    """A rational ``x`` with ``e . x = 0`` and ``a . x >= 1``, or ``None``.

    Since the inequality system is homogeneous apart from the margin, a
    feasible point certifies strict feasibility of ``a . x > 0`` on the
    subspace cut out by the equalities.
    """
    nrows = len(equalities) + len(inequalities)
    if nrows == 0:
        return [Fraction(0)] * dim
    # columns: u (dim), w (dim), slacks, artificials, right-hand side;
    # x = u - w and the phase-1 objective row sits at index ``nrows``
    nslack = len(inequalities)
    nvars = 2 * dim + nslack
    ncols = nvars + nrows + 1
    rhs = ncols - 1

    T: list[list[int]] = []
    r = 0
    for eq in equalities:
        row = [0] * ncols
        for j, c in enumerate(eq):
            row[j] = c
            row[dim + j] = -c
        row[nvars + r] = 1
        T.append(row)
        r += 1
    for si, ineq in enumerate(inequalities):
        row = [0] * ncols
        for j, c in enumerate(ineq):
            row[j] = c
            row[dim + j] = -c
        row[2 * dim + si] = -1
        row[nvars + r] = 1
        row[rhs] = 1
        T.append(row)
        r += 1

    # phase-1 objective (minimize artificial sum) as reduced costs
    obj = [0] * ncols
    for row in T:
        for j in range(ncols):
            if row[j]:
                obj[j] -= row[j]
    for j in range(nvars, nvars + nrows):
        obj[j] += 1
    T.append(obj)

    basis = [nvars + i for i in range(nrows)]
    prev = 1
    while True:
        objrow = T[nrows]
        entering = -1
        for j in range(ncols - 1):
            if objrow[j] < 0:
                entering = j
                break
        if entering < 0:
            break
        leaving = -1
        bn = bd = 0  # best ratio as fraction bn/bd with bd > 0
        for i in range(nrows):
            a = T[i][entering]
            if a > 0:
                if (
                    leaving < 0
                    or T[i][rhs] * bd < bn * a
                    or (T[i][rhs] * bd == bn * a and basis[i] < basis[leaving])
                ):
                    bn, bd = T[i][rhs], a
                    leaving = i
        if leaving < 0:
            return None  # unbounded phase-1 cannot happen; defensive
        prev = _pivot(T, basis, leaving, entering, prev)

    if T[nrows][rhs] != 0:
        return None
    x = [Fraction(0)] * dim
    for i, b in enumerate(basis):
        if T[i][b] == 0:
            continue
        val = Fraction(T[i][rhs], T[i][b])
        if b < dim:
            x[b] += val
        elif b < 2 * dim:
            x[b - dim] -= val
    # exactness guard: the point must actually satisfy the system
    for eq in equalities:
        assert sum(c * xi for c, xi in zip(eq, x)) == 0
    for ineq in inequalities:
        assert sum(c * xi for c, xi in zip(ineq, x)) >= 1
    return x
