"""Forward simulators: marginals implied by known model parameters.

Used for fixtures, property tests, and the ``gen`` CLI subcommand.  All
outputs are exact.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .domain import (
    ZERO,
    ChoiceDistribution,
    MarginalDataset,
    MenuDistribution,
    PreferenceOrder,
    Universe,
    bits_of,
)
from .errors import InvalidParameters, TieEncountered
from .ircs import StarDataset, ircs_forward
from .luce import LuceWeights, luce_forward
from .rum import OrderDistribution


def gen_rum(
    universe: Universe, mu: MenuDistribution, nu: OrderDistribution
) -> MarginalDataset:
    """Dataset induced by a population of orders choosing their top option."""
    probs = [ZERO] * universe.n
    for order, w in nu.weights.items():
        if order.n != universe.n:
            raise InvalidParameters("order does not match the universe")
        for mask, mw in mu.weights.items():
            probs[order.top_of(mask)] += w * mw
    return MarginalDataset(universe, mu, ChoiceDistribution(tuple(probs)))


def gen_luce(
    universe: Universe, mu: MenuDistribution, weights: LuceWeights
) -> MarginalDataset:
    """Dataset induced by proportional choice with the given weights."""
    return MarginalDataset(universe, mu, luce_forward(universe, mu, weights))


def gen_ircs(
    universe: Universe,
    mu_star: MenuDistribution,
    order: PreferenceOrder,
    gamma: Sequence[Fraction],
) -> StarDataset:
    """Dataset with outside option induced by independent consideration."""
    return ircs_forward(universe, mu_star, order, tuple(gamma))


TscAgent = tuple[tuple[Fraction, ...], tuple[Fraction, ...], Fraction]


def _menu_utility(u: Sequence[Fraction], v: Sequence[Fraction], mask: int):
    best_total = max(u[a] + v[a] for a in bits_of(mask))
    best_urge = max(v[a] for a in bits_of(mask))
    return best_total - best_urge


def gen_tsc(
    universe: Universe,
    agents: Sequence[TscAgent],
    feasible: Sequence[int],
) -> MarginalDataset:
    """Dataset induced by a finite population of temptation/self-control agents.

    Each agent is a (value vector, urge vector, weight) triple.  Both the
    menu stage and the alternative stage must have a strict maximizer;
    any tie is an error.
    """
    n = universe.n
    menus = list(feasible)
    if not menus:
        raise InvalidParameters("feasible collection must be nonempty")
    mu_weights: dict[int, Fraction] = {}
    probs = [ZERO] * n
    total = sum((Fraction(w) for _, _, w in agents), ZERO)
    if total != 1:
        raise InvalidParameters("agent weights must sum to 1")
    for u, v, w in agents:
        if len(u) != n or len(v) != n:
            raise InvalidParameters("utility vectors must cover the universe")
        utilities = [( _menu_utility(u, v, mask), mask) for mask in menus]
        best = max(ut for ut, _ in utilities)
        top_menus = [mask for ut, mask in utilities if ut == best]
        if len(top_menus) != 1:
            raise TieEncountered("tie between feasible menus")
        menu = top_menus[0]
        totals = [(u[a] + v[a], a) for a in bits_of(menu)]
        best_total = max(t for t, _ in totals)
        top_alts = [a for t, a in totals if t == best_total]
        if len(top_alts) != 1:
            raise TieEncountered("tie between alternatives in the chosen menu")
        w = Fraction(w)
        mu_weights[menu] = mu_weights.get(menu, ZERO) + w
        probs[top_alts[0]] += w
    return MarginalDataset(
        universe, MenuDistribution(mu_weights), ChoiceDistribution(tuple(probs))
    )


def random_fraction_vector(rng: random.Random, size: int, grain: int = 60):
    """Nonnegative rationals summing to 1 with denominator dividing ``grain``."""
    cuts = sorted(rng.randrange(grain + 1) for _ in range(size - 1))
    parts = []
    prev = 0
    for c in cuts:
        parts.append(Fraction(c - prev, grain))
        prev = c
    parts.append(Fraction(grain - prev, grain))
    return parts


def random_menu_distribution(
    rng: random.Random,
    universe: Universe,
    support_size: int | None = None,
    grain: int = 60,
) -> MenuDistribution:
    """Uniformly drawn support of menus with random rational weights."""
    full = universe.full_mask
    menus = list(range(1, full + 1))
    if support_size is None:
        support_size = rng.randint(1, len(menus))
    support = rng.sample(menus, support_size)
    weights = random_fraction_vector(rng, len(support) + 1, grain)
    # Drop one part so the support can shrink; renormalize exactly.
    weights = weights[: len(support)]
    total = sum(weights, ZERO)
    if total == 0:
        return MenuDistribution({support[0]: Fraction(1)})
    return MenuDistribution(
        {m: w / total for m, w in zip(support, weights) if w > 0}
    )


def random_choice_distribution(
    rng: random.Random, n: int, grain: int = 60
) -> ChoiceDistribution:
    return ChoiceDistribution(tuple(random_fraction_vector(rng, n, grain)))
