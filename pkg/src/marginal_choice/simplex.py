"""Exact-rational linear feasibility via phase-I simplex pivoting.

Small and dense on purpose: the systems solved here have at most a few
dozen rows and tens of thousands of columns.  Bland's rule (lowest-index
entering and leaving variable) guarantees termination and makes the
returned point deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


def solve_equality_feasibility(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> list[Fraction] | None:
    """Find x >= 0 with rows @ x == rhs, or None when the system is infeasible.

    Minimizes the sum of artificial variables; a zero optimum certifies
    feasibility and the basic solution restricted to the original columns
    is returned.
    """
    m = len(rows)
    if m == 0:
        return []
    k = len(rows[0])
    # Tableau: original columns, artificial identity, rhs. Flip signs so
    # the right-hand side is nonnegative.
    tab: list[list[Fraction]] = []
    for i in range(m):
        row = [Fraction(x) for x in rows[i]]
        b = Fraction(rhs[i])
        if b < 0:
            row = [-x for x in row]
            b = -b
        row.extend(ONE if j == i else ZERO for j in range(m))
        row.append(b)
        tab.append(row)
    basis = [k + i for i in range(m)]
    total_cols = k + m

    while True:
        # Reduced cost of column j under the phase-I objective
        # (artificials cost 1, originals cost 0).
        entering = -1
        for j in range(total_cols):
            if j in basis:
                continue
            cost = ONE if j >= k else ZERO
            reduced = cost - sum(
                tab[i][j] for i in range(m) if basis[i] >= k
            )
            if reduced < 0:
                entering = j
                break
        if entering < 0:
            break
        leaving = -1
        best_ratio = None
        for i in range(m):
            coef = tab[i][entering]
            if coef > 0:
                ratio = tab[i][-1] / coef
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leaving])
                ):
                    best_ratio = ratio
                    leaving = i
        if leaving < 0:
            # Unbounded phase-I objective cannot happen (bounded below by 0).
            raise AssertionError("phase-I ratio test failed")
        pivot = tab[leaving][entering]
        tab[leaving] = [x / pivot for x in tab[leaving]]
        for i in range(m):
            if i != leaving and tab[i][entering] != 0:
                factor = tab[i][entering]
                tab[i] = [
                    x - factor * y for x, y in zip(tab[i], tab[leaving])
                ]
        basis[leaving] = entering

    objective = sum(tab[i][-1] for i in range(m) if basis[i] >= k)
    if objective != 0:
        return None
    x = [ZERO] * k
    for i, var in enumerate(basis):
        if var < k:
            x[var] = tab[i][-1]
    return x
