"""Geometry of the core of a cumulative game.

Membership with violation certificates, marginal-contribution extreme
points per preference order, tight-face detection, and interiority.
Everything here is exact: tightness means rational equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .domain import (
    ChoiceDistribution,
    MenuDistribution,
    PreferenceOrder,
    all_orders,
)
from .errors import NotConvex, NotInCore, TooManyOrders, UniverseMismatch
from .games import CooperativeGame, choice_mass_table, classify

DEFAULT_ORDER_CAP = 8


@dataclass(frozen=True)
class CoreMembershipReport:
    """Outcome of a core-membership scan.

    ``violated`` holds (menu mask, deficit v(A) - lam(A)) pairs with
    positive deficit; ``tight`` holds the proper menus met with equality.
    """

    member: bool
    violated: tuple[tuple[int, Fraction], ...]
    tight: tuple[int, ...]
    min_slack: tuple[int, Fraction] | None

    @property
    def interior(self) -> bool:
        return self.member and not self.tight


def core_contains(
    game: CooperativeGame,
    lam: ChoiceDistribution,
    mu: MenuDistribution | None = None,
) -> CoreMembershipReport:
    """Scan lam(A) >= v(A) over every proper nonempty menu A.

    When ``mu`` is supplied, the dual family lam(A) <= mass of menus
    meeting A is evaluated as well and the two verdicts are asserted to
    agree (the A-inequality of one is the complement-inequality of the
    other).
    """
    n = game.n
    if lam.n != n:
        raise UniverseMismatch("choice distribution does not match the game")
    full = (1 << n) - 1
    lam_table = choice_mass_table(lam.probs, n)
    violated: list[tuple[int, Fraction]] = []
    tight: list[int] = []
    min_slack: tuple[int, Fraction] | None = None
    for mask in range(1, full):
        slack = lam_table[mask] - game[mask]
        if slack < 0:
            violated.append((mask, -slack))
        elif slack == 0:
            tight.append(mask)
        if min_slack is None or slack < min_slack[1]:
            min_slack = (mask, slack)
    if mu is not None:
        # lam(A) <= sum of mu(B) over B meeting A, i.e. 1 - v(complement).
        upper_ok = all(
            lam_table[mask] <= 1 - game[full ^ mask] for mask in range(1, full)
        )
        assert upper_ok == (not violated)
    return CoreMembershipReport(
        member=not violated,
        violated=tuple(violated),
        tight=tuple(tight),
        min_slack=min_slack,
    )


def extreme_point(game: CooperativeGame, order: PreferenceOrder) -> ChoiceDistribution:
    """Marginal-contribution vector of an order; a core vertex for convex games."""
    if not classify(game).convex:
        raise NotConvex("extreme points require a convex game")
    return _extreme_point_unchecked(game, order)


def _extreme_point_unchecked(
    game: CooperativeGame, order: PreferenceOrder
) -> ChoiceDistribution:
    n = game.n
    probs = [Fraction(0)] * n
    below = 0
    for alt in reversed(order.ranking):
        probs[alt] = game[below | (1 << alt)] - game[below]
        below |= 1 << alt
    return ChoiceDistribution(tuple(probs))


def all_extreme_points(
    game: CooperativeGame, order_cap: int = DEFAULT_ORDER_CAP
) -> dict[PreferenceOrder, ChoiceDistribution]:
    """Vertex per order, for every order.

    Under strict convexity the map is injective; this is asserted.
    """
    n = game.n
    if n > order_cap:
        raise TooManyOrders(
            f"{n}! orders exceed the enumeration cap (n <= {order_cap})"
        )
    cls = classify(game)
    if not cls.convex:
        raise NotConvex("extreme points require a convex game")
    points = {
        order: _extreme_point_unchecked(game, order) for order in all_orders(n)
    }
    if cls.strictly_convex:
        distinct = {p.probs for p in points.values()}
        assert len(distinct) == math.factorial(n)
    return points


def interior_test(game: CooperativeGame, lam: ChoiceDistribution) -> bool:
    """True iff lam sits strictly inside every proper core constraint."""
    report = core_contains(game, lam)
    if not report.member:
        raise NotInCore("distribution is outside the core")
    return not report.tight
