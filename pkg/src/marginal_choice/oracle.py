"""Brute-force verifiers built from the raw definitions only.

These solve the defining linear systems directly (conditional
probabilities per menu, or weights over all orders) without going through
the core, flow, or vertex characterizations, so they can serve as
independent cross-checks in the test suite.
"""

from __future__ import annotations

from fractions import Fraction

from .domain import MarginalDataset, all_orders, bits_of
from .errors import TooLarge
from .simplex import solve_equality_feasibility

MAX_ORACLE_N = 6
MAX_ORACLE_SUPPORT = 20
MAX_ORACLE_RUM_N = 5

ZERO = Fraction(0)
ONE = Fraction(1)


def oracle_rationalizable(dataset: MarginalDataset) -> bool:
    """Feasibility of the defining system in the variables pi(a | A).

    One row-sum constraint per support menu, one marginal constraint per
    alternative, nonnegativity throughout.
    """
    n = dataset.universe.n
    support = sorted(dataset.mu.weights)
    if n > MAX_ORACLE_N or len(support) > MAX_ORACLE_SUPPORT:
        raise TooLarge("oracle handles only tiny instances")
    columns = [
        (mask, a) for mask in support for a in bits_of(mask)
    ]
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for menu in support:
        rows.append([ONE if mask == menu else ZERO for mask, _ in columns])
        rhs.append(ONE)
    for alt in range(n):
        rows.append(
            [
                dataset.mu[mask] if a == alt else ZERO
                for mask, a in columns
            ]
        )
        rhs.append(dataset.lam[alt])
    return solve_equality_feasibility(rows, rhs) is not None


def oracle_rum(dataset: MarginalDataset) -> bool:
    """Feasibility of the defining system in weights over all n! orders."""
    n = dataset.universe.n
    if n > MAX_ORACLE_RUM_N:
        raise TooLarge("order enumeration oracle handles n <= 5")
    orders = list(all_orders(n))
    induced = []
    for order in orders:
        probs = [ZERO] * n
        for mask, w in dataset.mu.weights.items():
            probs[order.top_of(mask)] += w
        induced.append(probs)
    rows = [[induced[j][a] for j in range(len(orders))] for a in range(n)]
    rows.append([ONE] * len(orders))
    rhs = list(dataset.lam.probs) + [ONE]
    return solve_equality_feasibility(rows, rhs) is not None
