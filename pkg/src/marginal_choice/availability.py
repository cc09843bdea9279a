"""Availability-only data: per-alternative availability instead of a menu
distribution.

Deciding whether some menu distribution matching the availabilities makes
the choices rationalizable reduces to a componentwise comparison; the
witness distribution comes from a mass-shifting construction that raises
each alternative's availability to its target without ever shrinking the
feasible region.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .domain import (
    ZERO,
    ChoiceDistribution,
    MenuDistribution,
    Universe,
)
from .errors import DatasetError, NotPotentiallyRationalizable, UniverseMismatch


@dataclass(frozen=True)
class AvailabilityVector:
    """Marginal availability probability per alternative (no sum constraint)."""

    xi: tuple[Fraction, ...]

    def __post_init__(self):
        xi = tuple(Fraction(x) for x in self.xi)
        if any(x < 0 or x > 1 for x in xi):
            raise DatasetError("availabilities must lie in [0, 1]")
        object.__setattr__(self, "xi", xi)

    def __getitem__(self, i: int) -> Fraction:
        return self.xi[i]

    @property
    def n(self) -> int:
        return len(self.xi)


def induced_availability(mu: MenuDistribution, n: int) -> AvailabilityVector:
    """Availability of each alternative under a menu distribution."""
    xi = [ZERO] * n
    for mask, w in mu.weights.items():
        for i in range(n):
            if mask >> i & 1:
                xi[i] += w
    return AvailabilityVector(tuple(xi))


def potentially_rationalizable(
    xi: AvailabilityVector, lam: ChoiceDistribution
) -> bool:
    """True iff no alternative is chosen more often than it is available."""
    if xi.n != lam.n:
        raise UniverseMismatch("availability and choices differ in length")
    return all(lam[i] <= xi[i] for i in range(xi.n))


def construct_mu(
    universe: Universe, xi: AvailabilityVector, lam: ChoiceDistribution
) -> MenuDistribution:
    """One menu distribution matching the availabilities exactly and keeping
    the choices rationalizable.

    Start from the choice probabilities on singletons, then repeatedly
    pick the lowest-index alternative whose availability falls short and
    shift mass from a menu missing it to that menu plus the alternative.
    Availabilities only grow along the way, and mass only moves to
    supersets, so the final pair stays rationalizable.
    """
    n = universe.n
    if xi.n != n or lam.n != n:
        raise UniverseMismatch("inputs do not match the universe")
    if not potentially_rationalizable(xi, lam):
        raise NotPotentiallyRationalizable(
            "some alternative is chosen more often than it is available"
        )
    weights: dict[int, Fraction] = {}
    current = [ZERO] * n
    for i in range(n):
        if lam[i] > 0:
            weights[1 << i] = lam[i]
        current[i] = lam[i]

    max_steps = n * (1 << (n - 1))
    steps = 0
    while True:
        deficient = next(
            (i for i in range(n) if current[i] < xi[i]), None
        )
        if deficient is None:
            break
        steps += 1
        assert steps <= max_steps
        bit = 1 << deficient
        # Largest-mass support menu missing the alternative; ties go to the
        # lowest bitmask.
        candidates = [m for m in weights if not m & bit]
        assert candidates, "availability below 1 forces such a menu to exist"
        donor = min(candidates, key=lambda m: (-weights[m], m))
        shift = min(weights[donor], xi[deficient] - current[deficient])
        weights[donor] -= shift
        if weights[donor] == 0:
            del weights[donor]
        target = donor | bit
        weights[target] = weights.get(target, ZERO) + shift
        current[deficient] += shift

    mu = MenuDistribution(weights)
    assert induced_availability(mu, n).xi == xi.xi
    return mu
