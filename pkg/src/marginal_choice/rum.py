"""Random-utility analysis of marginal datasets.

Feasibility reduces to core membership; the explicit witness is a
distribution over strict orders obtained by decomposing the choice
distribution into core vertices with the exact phase-I solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .core_geometry import (
    DEFAULT_ORDER_CAP,
    CoreMembershipReport,
    all_extreme_points,
    core_contains,
)
from .domain import (
    ZERO,
    ChoiceDistribution,
    MarginalDataset,
    PreferenceOrder,
)
from .errors import (
    DegenerateDenominator,
    NotRationalizable,
    PairSupportMissing,
)
from .games import CooperativeGame, game_from_mu
from .simplex import solve_equality_feasibility


@dataclass(frozen=True)
class OrderDistribution:
    """Probability distribution over strict preference orders."""

    weights: Mapping[PreferenceOrder, Fraction]

    def __post_init__(self):
        clean = {
            order: Fraction(w) for order, w in self.weights.items() if w != 0
        }
        if any(w < 0 for w in clean.values()):
            raise ValueError("order weights must be nonnegative")
        if sum(clean.values(), ZERO) != 1:
            raise ValueError("order weights must sum to 1")
        object.__setattr__(self, "weights", clean)

    @property
    def support(self) -> tuple[PreferenceOrder, ...]:
        return tuple(sorted(self.weights, key=lambda o: o.ranking))


def induced_choice(
    dataset: MarginalDataset, nu: OrderDistribution
) -> ChoiceDistribution:
    """Choice distribution a population of orders generates under mu."""
    n = dataset.universe.n
    probs = [ZERO] * n
    for order, w in nu.weights.items():
        for mask, mw in dataset.mu.weights.items():
            probs[order.top_of(mask)] += w * mw
    return ChoiceDistribution(tuple(probs))


def rum_rationalize(
    dataset: MarginalDataset, order_cap: int = DEFAULT_ORDER_CAP
) -> OrderDistribution:
    """One distribution over orders reproducing the dataset exactly.

    Multiple rationalizations typically exist; the deterministic pivoting
    rule fixes which one comes back.  Raises ``NotRationalizable`` with
    the violation certificate when the core test fails.
    """
    game = game_from_mu(dataset.universe, dataset.mu)
    report = core_contains(game, dataset.lam, dataset.mu)
    if not report.member:
        raise NotRationalizable(report)
    points = all_extreme_points(game, order_cap)
    orders = sorted(points, key=lambda o: o.ranking)
    n = dataset.universe.n
    rows = [[points[o][a] for o in orders] for a in range(n)]
    rows.append([Fraction(1)] * len(orders))
    rhs = list(dataset.lam.probs) + [Fraction(1)]
    solution = solve_equality_feasibility(rows, rhs)
    assert solution is not None  # core membership guarantees a decomposition
    nu = OrderDistribution(
        {o: w for o, w in zip(orders, solution) if w != 0}
    )
    assert induced_choice(dataset, nu).probs == dataset.lam.probs
    return nu


def _require_pair_support(dataset: MarginalDataset) -> None:
    universe = dataset.universe
    for i in range(universe.n):
        for j in range(i + 1, universe.n):
            if dataset.mu[(1 << i) | (1 << j)] == 0:
                raise PairSupportMissing(
                    (universe.alternatives[i], universe.alternatives[j])
                )


def _require_rationalizable(
    dataset: MarginalDataset,
) -> tuple[CooperativeGame, CoreMembershipReport]:
    game = game_from_mu(dataset.universe, dataset.mu)
    report = core_contains(game, dataset.lam)
    if not report.member:
        raise NotRationalizable(report)
    return game, report


def inferior_test(dataset: MarginalDataset, menu: int) -> bool:
    """True iff every rationalizing population ranks ``menu`` below its complement.

    Requires positive mass on every doubleton menu; the equality
    lam(menu) = v(menu) then decides the question for every witness at
    once.
    """
    _require_pair_support(dataset)
    game, _ = _require_rationalizable(dataset)
    return dataset.lam.mass(menu) == game[menu]


def inferior_chain(dataset: MarginalDataset) -> list[int]:
    """All menus tight at lam, verified to be nested, sorted by size."""
    _require_pair_support(dataset)
    game, report = _require_rationalizable(dataset)
    full = dataset.universe.full_mask
    chain = sorted(list(report.tight) + [full], key=lambda m: m.bit_count())
    for smaller, larger in zip(chain, chain[1:]):
        if smaller & ~larger:
            raise AssertionError(
                "tight menus failed to nest; this cannot happen for "
                "rationalizable data with full pair support"
            )
    return chain


def superiority_bound(dataset: MarginalDataset, menu: int) -> Fraction:
    """(lam(A) - v(A)) / (1 - v(A) - v(A^c)) for A = ``menu``.

    Upper bound on the witness probability that A is superior, and lower
    bound on the probability that A is not inferior, uniformly over all
    rationalizing distributions.
    """
    game, _ = _require_rationalizable(dataset)
    full = dataset.universe.full_mask
    denominator = 1 - game[menu] - game[full ^ menu]
    if denominator <= 0:
        raise DegenerateDenominator(
            "no menu straddles the set; the bound is undefined"
        )
    return (dataset.lam.mass(menu) - game[menu]) / denominator


def unique_rum(dataset: MarginalDataset) -> bool:
    """True iff a tight menu exists at every cardinality from 2 to n."""
    _require_pair_support(dataset)
    game, report = _require_rationalizable(dataset)
    n = dataset.universe.n
    sizes = {m.bit_count() for m in report.tight}
    sizes.add(n)  # the full set is always tight
    return all(k in sizes for k in range(2, n + 1))
