"""Cooperative-game machinery: cumulative games, Möbius transforms, classes.

A game is stored densely as ``2^n`` exact rationals indexed by subset
bitmask.  The subset transforms factor out a common denominator and run
over integer numerators so the compiled kernel path stays exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import kernels
from .domain import ONE, ZERO, MenuDistribution, Universe, bits_of
from .errors import DatasetError


def _common_denominator(values: Sequence[Fraction]) -> tuple[list[int], int]:
    den = 1
    for v in values:
        den = den * v.denominator // math.gcd(den, v.denominator)
    nums = [int(v * den) for v in values]
    return nums, den


def _zeta(values: Sequence[Fraction], n: int) -> list[Fraction]:
    nums, den = _common_denominator(values)
    return [Fraction(x, den) for x in kernels.zeta(nums, n)]


def _mobius(values: Sequence[Fraction], n: int) -> list[Fraction]:
    nums, den = _common_denominator(values)
    return [Fraction(x, den) for x in kernels.mobius(nums, n)]


@dataclass(frozen=True)
class CooperativeGame:
    """Set function v on subsets with v(empty) = 0 and v(X) = 1."""

    universe: Universe
    values: tuple[Fraction, ...]

    def __post_init__(self):
        n = self.universe.n
        values = tuple(Fraction(v) for v in self.values)
        if len(values) != 1 << n:
            raise DatasetError(
                f"game needs {1 << n} values, got {len(values)}"
            )
        if values[0] != 0:
            raise DatasetError("v(empty set) must be 0")
        if values[-1] != 1:
            raise DatasetError("v(X) must be 1")
        object.__setattr__(self, "values", values)

    def __getitem__(self, mask: int) -> Fraction:
        return self.values[mask]

    @property
    def n(self) -> int:
        return self.universe.n


@dataclass(frozen=True)
class MobiusVector:
    """Unique vector z with v(A) = sum of z(B) over B subseteq A."""

    universe: Universe
    z: tuple[Fraction, ...]

    def __getitem__(self, mask: int) -> Fraction:
        return self.z[mask]

    def nonnegative(self) -> bool:
        return all(x >= 0 for x in self.z)

    def to_game(self) -> CooperativeGame:
        """Cumulative reconstruction; exact inverse of :func:`mobius`."""
        return CooperativeGame(
            self.universe, tuple(_zeta(self.z, self.universe.n))
        )


@dataclass(frozen=True)
class GameClassification:
    totally_monotone: bool
    convex: bool
    strictly_convex: bool


def game_from_mu(universe: Universe, mu: MenuDistribution) -> CooperativeGame:
    """Cumulative game of a menu distribution: v(A) = mass of submenus of A."""
    n = universe.n
    dense = [ZERO] * (1 << n)
    for mask, w in mu.weights.items():
        dense[mask] = w
    return CooperativeGame(universe, tuple(_zeta(dense, n)))


def mobius(game: CooperativeGame) -> MobiusVector:
    """Möbius transform of a game; inverting it recovers the game exactly."""
    return MobiusVector(
        game.universe, tuple(_mobius(game.values, game.n))
    )


def classify(game: CooperativeGame) -> GameClassification:
    """Total monotonicity, convexity, and strict convexity flags.

    Convexity uses the local pairwise-increments criterion.  Under total
    monotonicity, strict convexity reduces to positivity of the Möbius
    mass on every doubleton; otherwise the strict local test decides.
    """
    n = game.n
    z = mobius(game)
    totally_monotone = z.nonnegative()
    nums, _ = _common_denominator(game.values)
    convex = totally_monotone or kernels.supermodular(nums, n, strict=False)
    if totally_monotone:
        strictly_convex = all(
            z[(1 << i) | (1 << j)] > 0
            for i in range(n)
            for j in range(i + 1, n)
        )
    elif convex:
        strictly_convex = kernels.supermodular(nums, n, strict=True)
    else:
        strictly_convex = False
    return GameClassification(totally_monotone, convex, strictly_convex)


def choice_mass_table(probs: Sequence[Fraction], n: int) -> list[Fraction]:
    """lam(A) for every mask A, from per-alternative probabilities."""
    dense = [ZERO] * (1 << n)
    for i in range(n):
        dense[1 << i] = Fraction(probs[i])
    return _zeta(dense, n)
