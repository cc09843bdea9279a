"""Independent random consideration sets with an always-available outside option.

Observed menus all contain the outside option and are keyed by their part
inside the original universe.  Given an order, the consideration
probabilities come out of a closed-form recursion; rationalizability of
the dataset is a search over orders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .domain import (
    ONE,
    ZERO,
    MenuDistribution,
    PreferenceOrder,
    Universe,
    all_orders,
    bits_of,
    submasks,
)
from .errors import (
    DatasetError,
    InvalidParameters,
    SingletonSupportMissing,
    SumNotOne,
    TooManyOrders,
    UniverseMismatch,
)

DEFAULT_ORDER_CAP = 8


@dataclass(frozen=True)
class StarDataset:
    """Marginals over menus-with-outside-option and choices including it.

    ``mu_star`` keys each observed menu by its part inside the universe
    (the outside option is implicit); ``lam`` covers the universe and
    ``lam_out`` is the outside option's probability, which must equal the
    residual mass exactly.
    """

    universe: Universe
    mu_star: MenuDistribution
    lam: tuple[Fraction, ...]
    lam_out: Fraction

    def __post_init__(self):
        lam = tuple(Fraction(p) for p in self.lam)
        lam_out = Fraction(self.lam_out)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "lam_out", lam_out)
        if len(lam) != self.universe.n:
            raise UniverseMismatch("choice probabilities must cover the universe")
        if any(p < 0 for p in lam) or lam_out < 0:
            raise DatasetError("negative choice probability")
        total = sum(lam, ZERO) + lam_out
        if total != 1:
            raise SumNotOne(total - 1, what="choice probabilities")
        full = self.universe.full_mask
        for mask in self.mu_star.weights:
            if mask & ~full:
                raise UniverseMismatch("menu outside the universe")

    def availability(self, alt: int) -> Fraction:
        """Probability that ``alt`` is available."""
        return sum(
            (w for mask, w in self.mu_star.weights.items() if mask >> alt & 1),
            ZERO,
        )


@dataclass(frozen=True)
class IrcsSolution:
    """An order plus per-alternative consideration probabilities."""

    order: PreferenceOrder
    gamma: tuple[Fraction, ...]


def _require_singleton_support(dataset: StarDataset) -> None:
    for alt in range(dataset.universe.n):
        if dataset.mu_star[1 << alt] == 0:
            raise SingletonSupportMissing(dataset.universe.alternatives[alt])


def ircs_t_vector(
    dataset: StarDataset, order: PreferenceOrder
) -> list[Fraction]:
    """The recursion values for an order, best alternative first.

    Values above 1 are reported as-is (they quantify how far the order is
    from rationalizing the data); the order rationalizes the dataset iff
    every value is at most 1.
    """
    _require_singleton_support(dataset)
    n = dataset.universe.n
    if order.n != n:
        raise UniverseMismatch("order does not match the universe")
    t: list[Fraction] = []
    upper = 0  # mask of alternatives ranked before the current one
    for k, alt in enumerate(order.ranking):
        ak_bit = 1 << alt
        # Group menu mass by intersection with the already-ranked set.
        grouped: dict[int, Fraction] = {}
        for mask, w in dataset.mu_star.weights.items():
            if mask & ak_bit:
                key = mask & upper
                grouped[key] = grouped.get(key, ZERO) + w
        denominator = ZERO
        for sub in submasks(upper):
            weight = grouped.get(sub)
            if weight is None:
                continue
            coeff = ONE
            for i in bits_of(sub):
                coeff *= 1 - t[order.rank_of(i)]
            denominator += weight * coeff
        if denominator == 0:
            raise ZeroDivisionError(
                "recursion denominator vanished; the order cannot "
                "rationalize the data"
            )
        t.append(dataset.lam[alt] / denominator)
        upper |= ak_bit
    return t


def ircs_rationalize(
    dataset: StarDataset, order_cap: int = DEFAULT_ORDER_CAP
) -> list[IrcsSolution]:
    """All (order, gamma) pairs reproducing the dataset; empty iff none exist.

    Orders are scanned lexicographically by ranking; for each feasible one
    the consideration probabilities are unique.
    """
    _require_singleton_support(dataset)
    n = dataset.universe.n
    if n > order_cap:
        raise TooManyOrders(
            f"{n}! orders exceed the enumeration cap (n <= {order_cap})"
        )
    solutions: list[IrcsSolution] = []
    for order in all_orders(n):
        try:
            t = ircs_t_vector(dataset, order)
        except ZeroDivisionError:
            continue
        if all(x <= 1 for x in t):
            gamma = [ZERO] * n
            for k, alt in enumerate(order.ranking):
                gamma[alt] = t[k]
            solutions.append(IrcsSolution(order, tuple(gamma)))
    return solutions


def ircs_forward(
    universe: Universe,
    mu_star: MenuDistribution,
    order: PreferenceOrder,
    gamma: tuple[Fraction, ...],
) -> StarDataset:
    """Choice marginals induced by consideration probabilities under an order."""
    n = universe.n
    gamma = tuple(Fraction(g) for g in gamma)
    if len(gamma) != n:
        raise InvalidParameters("need one consideration probability per alternative")
    if any(g < 0 or g > 1 for g in gamma):
        raise InvalidParameters("consideration probabilities must lie in [0, 1]")
    lam = [ZERO] * n
    lam_out = ZERO
    for mask, w in mu_star.weights.items():
        none_considered = ONE
        for a in bits_of(mask):
            none_considered *= 1 - gamma[a]
        lam_out += w * none_considered
        for a in bits_of(mask):
            term = gamma[a]
            for b in bits_of(mask):
                if b != a and order.rank_of(b) < order.rank_of(a):
                    term *= 1 - gamma[b]
            lam[a] += w * term
    return StarDataset(universe, mu_star, tuple(lam), lam_out)
