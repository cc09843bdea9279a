"""Luce-model forward map, inversion, and exchangeability diagnostics.

The forward map is exact rational.  Inversion runs a damped
multiplicative fixed point in floating point (no closed form exists in
general) and optionally snaps the result to low-denominator rationals
when those re-verify exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core_geometry import core_contains
from .domain import (
    ZERO,
    ChoiceDistribution,
    MarginalDataset,
    MenuDistribution,
    Universe,
    bits_of,
)
from .errors import (
    InvalidParameters,
    NoConvergence,
    NotInterior,
    PairCoverageMissing,
    SameAlternative,
)
from .games import game_from_mu

MAX_ITERATIONS = 100_000
DEFAULT_TOL = 1e-10
_SNAP_LIMITS = (10, 100, 1_000, 10_000, 100_000, 1_000_000)


@dataclass(frozen=True)
class LuceWeights:
    """Strictly positive weight per alternative, normalized to sum 1."""

    u: tuple[Fraction, ...]

    def __post_init__(self):
        u = tuple(Fraction(x) for x in self.u)
        if any(x <= 0 for x in u):
            raise InvalidParameters("Luce weights must be strictly positive")
        if sum(u, ZERO) != 1:
            raise InvalidParameters("Luce weights must sum to 1")
        object.__setattr__(self, "u", u)

    def __getitem__(self, i: int) -> Fraction:
        return self.u[i]


@dataclass(frozen=True)
class LuceInversion:
    """Float inverse with its residual, plus an exact form when snapping worked."""

    u: tuple[float, ...]
    residual: float
    iterations: int
    rational: LuceWeights | None


def luce_forward(
    universe: Universe, mu: MenuDistribution, weights: LuceWeights
) -> ChoiceDistribution:
    """lam(a) = sum over menus of mu(A) * u(a) / u(A), exactly."""
    n = universe.n
    probs = [ZERO] * n
    for mask, w in mu.weights.items():
        denom = sum((weights[i] for i in bits_of(mask)), ZERO)
        for i in bits_of(mask):
            probs[i] += w * weights[i] / denom
    return ChoiceDistribution(tuple(probs))


def _forward_floats(
    support: list[tuple[float, list[int]]], u: list[float], n: int
) -> list[float]:
    out = [0.0] * n
    for w, members in support:
        denom = sum(u[i] for i in members)
        for i in members:
            out[i] += w * u[i] / denom
    return out


def _check_pair_coverage(universe: Universe, mu: MenuDistribution) -> None:
    n = universe.n
    for i in range(n):
        for j in range(i + 1, n):
            pair = (1 << i) | (1 << j)
            if not any(mask & pair == pair for mask in mu.weights):
                raise PairCoverageMissing(
                    (universe.alternatives[i], universe.alternatives[j])
                )


def luce_invert(
    dataset: MarginalDataset,
    tol: float = DEFAULT_TOL,
    max_iterations: int = MAX_ITERATIONS,
    snap: bool = True,
) -> LuceInversion:
    """Recover the unique weights whose forward image is the dataset's lam.

    Requires every pair of alternatives to appear together in some support
    menu and lam to be strictly inside the core.  The proportional update
    u <- normalize(u * (lam / lam_hat)^eta) runs with eta halved whenever
    the max-norm residual fails to decrease.
    """
    universe = dataset.universe
    _check_pair_coverage(universe, dataset.mu)
    game = game_from_mu(universe, dataset.mu)
    report = core_contains(game, dataset.lam)
    if not report.member or report.tight:
        raise NotInterior(
            "choice distribution is not strictly inside the core"
        )

    n = universe.n
    target = [float(p) for p in dataset.lam.probs]
    support = [
        (float(w), list(bits_of(mask)))
        for mask, w in sorted(dataset.mu.weights.items())
    ]
    u = [1.0 / n] * n
    predicted = _forward_floats(support, u, n)
    residual = max(abs(p - q) for p, q in zip(predicted, target))
    iterations = 0
    while residual >= tol and iterations < max_iterations:
        iterations += 1
        eta = 1.0
        while True:
            cand = [
                ui * (ti / pi) ** eta
                for ui, ti, pi in zip(u, target, predicted)
            ]
            total = sum(cand)
            cand = [x / total for x in cand]
            cand_predicted = _forward_floats(support, cand, n)
            cand_residual = max(
                abs(p - q) for p, q in zip(cand_predicted, target)
            )
            if cand_residual < residual or eta < 1e-6:
                break
            eta /= 2
        if cand_residual >= residual and eta < 1e-6:
            raise NoConvergence(residual, iterations)
        u, predicted, residual = cand, cand_predicted, cand_residual
    if residual >= tol:
        raise NoConvergence(residual, iterations)

    rational = _snap(universe, dataset, u) if snap else None
    return LuceInversion(
        u=tuple(u), residual=residual, iterations=iterations, rational=rational
    )


def _snap(
    universe: Universe, dataset: MarginalDataset, u: list[float]
) -> LuceWeights | None:
    """Round to low-denominator rationals and keep the result only if the
    exact forward map reproduces lam."""
    for limit in _SNAP_LIMITS:
        approx = [Fraction(x).limit_denominator(limit) for x in u]
        total = sum(approx, ZERO)
        if total == 0 or any(x <= 0 for x in approx):
            continue
        candidate = LuceWeights(tuple(x / total for x in approx))
        if (
            luce_forward(universe, dataset.mu, candidate).probs
            == dataset.lam.probs
        ):
            return candidate
    return None


def exchangeable(
    universe: Universe, mu: MenuDistribution, a: int, b: int
) -> bool:
    """True iff mu is symmetric under swapping alternatives ``a`` and ``b``."""
    if a == b:
        raise SameAlternative("exchangeability needs two distinct alternatives")
    rest = universe.full_mask & ~((1 << a) | (1 << b))
    sub = rest
    while True:
        if mu[sub | (1 << a)] != mu[sub | (1 << b)]:
            return False
        if sub == 0:
            return True
        sub = (sub - 1) & rest
