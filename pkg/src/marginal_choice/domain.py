"""Core data model: alternatives, menus, marginal datasets, orders.

Menus are plain ``int`` bitmasks over the indices of a :class:`Universe`.
All probabilities are exact :class:`fractions.Fraction` values; nothing in
this module touches floating point.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import (
    DatasetError,
    EmptyMenu,
    NegativeProbability,
    SumNotOne,
    UniverseMismatch,
    UnknownAlternative,
)

ONE = Fraction(1)
ZERO = Fraction(0)

DEFAULT_MAX_N = 24


def max_universe_size() -> int:
    """Cap on the number of alternatives (override via MARGINAL_CHOICE_MAX_N)."""
    raw = os.environ.get("MARGINAL_CHOICE_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    return int(raw)


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def parse_probability(raw) -> Fraction:
    """Parse a probability given as a decimal string, "p/q" string, or int.

    Floats are rejected: the file format carries decimals as strings so
    that "0.1" means exactly 1/10.
    """
    if isinstance(raw, bool):
        raise DatasetError(f"not a probability: {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, float):
        raise DatasetError(
            f"float probability {raw!r} not accepted; quote it as a string"
        )
    if isinstance(raw, str):
        try:
            return Fraction(raw.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DatasetError(f"cannot parse probability {raw!r}") from exc
    raise DatasetError(f"cannot parse probability {raw!r}")


@dataclass(frozen=True)
class Universe:
    """Ordered collection of distinct alternative labels."""

    alternatives: tuple[str, ...]

    def __post_init__(self):
        if not isinstance(self.alternatives, tuple):
            object.__setattr__(self, "alternatives", tuple(self.alternatives))
        cap = max_universe_size()
        if not 1 <= len(self.alternatives) <= cap:
            raise DatasetError(
                f"universe must have between 1 and {cap} alternatives, "
                f"got {len(self.alternatives)}"
            )
        seen = set()
        for label in self.alternatives:
            if not label:
                raise DatasetError("empty alternative label")
            if label in seen:
                raise DatasetError(f"duplicate alternative label {label!r}")
            seen.add(label)

    @property
    def n(self) -> int:
        return len(self.alternatives)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, label: str) -> int:
        try:
            return self.alternatives.index(label)
        except ValueError:
            raise UnknownAlternative(f"unknown alternative {label!r}") from None

    def menu_from_labels(self, labels: Iterable[str]) -> int:
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        if mask == 0:
            raise EmptyMenu("menus must be nonempty")
        return mask

    def parse_menu(self, key: str) -> int:
        """Parse a comma-joined menu key such as "a,b,c"."""
        return self.menu_from_labels(part.strip() for part in key.split(","))

    def menu_label(self, mask: int) -> str:
        """Canonical key for a menu: its labels sorted and comma-joined."""
        return ",".join(sorted(self.alternatives[i] for i in bits_of(mask)))

    def menus(self) -> Iterator[int]:
        """All nonempty menus, in bitmask order."""
        return iter(range(1, self.full_mask + 1))


@dataclass(frozen=True)
class MenuDistribution:
    """Support-only map from menu bitmask to positive probability, summing to 1."""

    weights: Mapping[int, Fraction]

    def __post_init__(self):
        clean: dict[int, Fraction] = {}
        for mask, w in self.weights.items():
            if mask <= 0:
                raise EmptyMenu("menus must be nonempty")
            w = Fraction(w)
            if w < 0:
                raise NegativeProbability(f"menu weight {w} < 0")
            if w == 0:
                continue
            clean[mask] = w
        total = sum(clean.values(), ZERO)
        if total != 1:
            raise SumNotOne(total - 1, what="menu weights")
        object.__setattr__(self, "weights", clean)

    def __getitem__(self, mask: int) -> Fraction:
        return self.weights.get(mask, ZERO)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.weights))

    def union_mask(self) -> int:
        out = 0
        for mask in self.weights:
            out |= mask
        return out


@dataclass(frozen=True)
class ChoiceDistribution:
    """Probability vector over the alternatives of a universe."""

    probs: tuple[Fraction, ...]

    def __post_init__(self):
        probs = tuple(Fraction(p) for p in self.probs)
        for p in probs:
            if p < 0:
                raise NegativeProbability(f"choice probability {p} < 0")
        total = sum(probs, ZERO)
        if total != 1:
            raise SumNotOne(total - 1, what="choice probabilities")
        object.__setattr__(self, "probs", probs)

    @property
    def n(self) -> int:
        return len(self.probs)

    def __getitem__(self, i: int) -> Fraction:
        return self.probs[i]

    def mass(self, mask: int) -> Fraction:
        """Total probability of the alternatives in ``mask``."""
        return sum((self.probs[i] for i in bits_of(mask)), ZERO)

    @property
    def support_mask(self) -> int:
        out = 0
        for i, p in enumerate(self.probs):
            if p > 0:
                out |= 1 << i
        return out


@dataclass(frozen=True)
class MarginalDataset:
    """The observable pair: menu distribution and aggregate choice distribution."""

    universe: Universe
    mu: MenuDistribution
    lam: ChoiceDistribution

    def __post_init__(self):
        full = self.universe.full_mask
        for mask in self.mu.weights:
            if mask & ~full:
                raise UniverseMismatch("menu outside the universe")
        if self.lam.n != self.universe.n:
            raise UniverseMismatch(
                f"choice distribution over {self.lam.n} alternatives, "
                f"universe has {self.universe.n}"
            )


@dataclass(frozen=True)
class PreferenceOrder:
    """Strict total order on alternatives, encoded best-first."""

    ranking: tuple[int, ...]

    def __post_init__(self):
        ranking = tuple(self.ranking)
        object.__setattr__(self, "ranking", ranking)
        if sorted(ranking) != list(range(len(ranking))):
            raise DatasetError(f"not a permutation: {ranking}")

    @property
    def n(self) -> int:
        return len(self.ranking)

    def rank_of(self, alt: int) -> int:
        """Position of ``alt`` in the ranking; 0 is best."""
        return self.ranking.index(alt)

    def lower_contour_mask(self, alt: int) -> int:
        """Bitmask of the alternatives ranked strictly below ``alt``."""
        pos = self.rank_of(alt)
        mask = 0
        for worse in self.ranking[pos + 1 :]:
            mask |= 1 << worse
        return mask

    def top_of(self, mask: int) -> int:
        """Best-ranked alternative among the set bits of ``mask``."""
        for alt in self.ranking:
            if mask >> alt & 1:
                return alt
        raise EmptyMenu("cannot take the top of an empty menu")

    def label(self, universe: Universe) -> str:
        return ">".join(universe.alternatives[i] for i in self.ranking)


def all_orders(n: int) -> Iterator[PreferenceOrder]:
    """All strict total orders on n alternatives, lexicographic by ranking."""
    for perm in itertools.permutations(range(n)):
        yield PreferenceOrder(perm)


@dataclass(frozen=True)
class StochasticChoiceFunction:
    """Conditional choice probabilities, one distribution per menu."""

    conditionals: Mapping[int, ChoiceDistribution]

    def __post_init__(self):
        for mask, dist in self.conditionals.items():
            if mask <= 0:
                raise EmptyMenu("menus must be nonempty")
            if dist.support_mask & ~mask:
                raise DatasetError(
                    f"conditional for menu {mask:b} puts mass outside the menu"
                )
        object.__setattr__(self, "conditionals", dict(self.conditionals))

    def marginal(self, mu: MenuDistribution, n: int) -> ChoiceDistribution:
        """Aggregate choice distribution induced together with ``mu``."""
        probs = [ZERO] * n
        for mask, w in mu.weights.items():
            dist = self.conditionals[mask]
            for i in bits_of(mask):
                probs[i] += w * dist[i]
        return ChoiceDistribution(tuple(probs))


def validate_dataset(raw: Mapping) -> MarginalDataset:
    """Build a :class:`MarginalDataset` from a parsed JSON object.

    Expects the keys ``alternatives``, ``mu``, and ``lambda``; probabilities
    must be exact (ints or strings). Raises a :class:`DatasetError` subclass
    naming the offending field; never renormalizes.
    """
    try:
        labels = list(raw["alternatives"])
    except KeyError:
        raise DatasetError("missing key 'alternatives'") from None
    universe = Universe(tuple(labels))

    try:
        raw_mu = raw["mu"]
    except KeyError:
        raise DatasetError("missing key 'mu'") from None
    weights: dict[int, Fraction] = {}
    for key, value in raw_mu.items():
        mask = universe.parse_menu(key)
        weights[mask] = weights.get(mask, ZERO) + parse_probability(value)
    mu = MenuDistribution(weights)

    try:
        raw_lam = raw["lambda"]
    except KeyError:
        raise DatasetError("missing key 'lambda'") from None
    probs = [ZERO] * universe.n
    for label, value in raw_lam.items():
        probs[universe.index(label)] = parse_probability(value)
    lam = ChoiceDistribution(tuple(probs))

    return MarginalDataset(universe, mu, lam)


def serialize_dataset(dataset: MarginalDataset) -> dict:
    """Inverse of :func:`validate_dataset`; probabilities become "p/q" strings."""
    universe = dataset.universe
    return {
        "alternatives": list(universe.alternatives),
        "mu": {
            universe.menu_label(mask): str(w)
            for mask, w in sorted(dataset.mu.weights.items())
        },
        "lambda": {
            universe.alternatives[i]: str(p)
            for i, p in enumerate(dataset.lam.probs)
        },
    }
