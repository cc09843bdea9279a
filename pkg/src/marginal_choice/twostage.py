"""Endogenous menu choice: temptation/self-control and preference for flexibility.

Both models restrict which feasible menus can carry mass and strengthen
the core constraints; the constructive witness for the first comes from
the flow engine with the allowed set of each menu shrunk to the
alternatives not available in any feasible sub-menu.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .core_geometry import CoreMembershipReport, core_contains
from .domain import (
    ZERO,
    MarginalDataset,
    MenuDistribution,
    Universe,
)
from .errors import DatasetError, SupportOutsideCollection
from .flow import FlowProblem, FlowResult, solve_flow
from .games import CooperativeGame, _zeta, game_from_mu


@dataclass(frozen=True)
class FeasibleCollection:
    """The menus an agent may pick in the first stage."""

    menus: frozenset[int]

    def __post_init__(self):
        menus = frozenset(self.menus)
        if not menus:
            raise DatasetError("feasible collection must be nonempty")
        if any(m <= 0 for m in menus):
            raise DatasetError("feasible menus must be nonempty")
        object.__setattr__(self, "menus", menus)

    def __contains__(self, mask: int) -> bool:
        return mask in self.menus


@dataclass(frozen=True)
class RedundancyReport:
    """Per-menu residual sets and the redundant / nested subcollections.

    ``bar[A]`` strips from A everything available in a strict feasible
    sub-menu; A is redundant when nothing remains.  ``nested`` collects
    menus strictly contained in another feasible menu.
    """

    bar: dict[int, int]
    redundant: frozenset[int]
    nested: frozenset[int]


def analyze_collection(collection: FeasibleCollection) -> RedundancyReport:
    menus = collection.menus
    bar: dict[int, int] = {}
    nested = set()
    for menu in menus:
        covered = 0
        strictly_contained = False
        for other in menus:
            if other != menu and other & ~menu == 0:
                covered |= other
            if other != menu and menu & ~other == 0:
                strictly_contained = True
        bar[menu] = menu & ~covered
        if strictly_contained:
            nested.add(menu)
    redundant = frozenset(m for m in menus if bar[m] == 0)
    return RedundancyReport(bar=bar, redundant=redundant, nested=frozenset(nested))


def _check_support(mu: MenuDistribution, collection: FeasibleCollection) -> None:
    outside = [m for m in mu.weights if m not in collection]
    if outside:
        raise SupportOutsideCollection(
            f"{len(outside)} support menus are not feasible"
        )


def game_tsc(
    universe: Universe, mu: MenuDistribution, collection: FeasibleCollection
) -> CooperativeGame:
    """Modified cumulative game: menus count once their residual set fits.

    Dominates the plain cumulative game pointwise, so the induced core is
    smaller.
    """
    _check_support(mu, collection)
    report = analyze_collection(collection)
    n = universe.n
    dense = [ZERO] * (1 << n)
    for mask, w in mu.weights.items():
        dense[report.bar[mask]] += w
    values = _zeta(dense, n)
    values[0] = ZERO  # mass of redundant menus never counts toward v(empty)
    return CooperativeGame(universe, tuple(values))


@dataclass(frozen=True)
class TscVerdict:
    """Temptation/self-control rationalizability with certificate or witness."""

    rationalizable: bool
    redundant_in_support: tuple[int, ...]
    core_report: CoreMembershipReport | None
    witness: FlowResult | None


def tsc_rationalize(
    dataset: MarginalDataset, collection: FeasibleCollection
) -> TscVerdict:
    """Support must avoid redundant menus and lam must dominate the
    modified game; a conditional system concentrated on residual sets is
    produced as witness."""
    _check_support(dataset.mu, collection)
    report = analyze_collection(collection)
    redundant_in_support = tuple(
        sorted(m for m in dataset.mu.weights if m in report.redundant)
    )
    if redundant_in_support:
        return TscVerdict(False, redundant_in_support, None, None)
    game = game_tsc(dataset.universe, dataset.mu, collection)
    core_report = core_contains(game, dataset.lam)
    if not core_report.member:
        return TscVerdict(False, (), core_report, None)
    witness = solve_flow(
        FlowProblem(
            n=dataset.universe.n,
            sources=tuple(sorted(dataset.mu.weights.items())),
            sink_weights=dataset.lam.probs,
            allowed={m: report.bar[m] for m in dataset.mu.weights},
        )
    )
    assert witness.feasible
    return TscVerdict(True, (), core_report, witness)


class PfVerdict(enum.Enum):
    RATIONALIZABLE = "rationalizable"
    NOT_RATIONALIZABLE = "not_rationalizable"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class PfReport:
    """Preference-for-flexibility trichotomy.

    The middle case (necessary condition holds but lam sits on the core
    boundary) is genuinely undecided; the tight constraints are listed so
    the boundary face can be inspected.
    """

    verdict: PfVerdict
    nested_in_support: tuple[int, ...]
    core_report: CoreMembershipReport


def pf_rationalize(
    dataset: MarginalDataset, collection: FeasibleCollection
) -> PfReport:
    _check_support(dataset.mu, collection)
    report = analyze_collection(collection)
    nested_in_support = tuple(
        sorted(m for m in dataset.mu.weights if m in report.nested)
    )
    game = game_from_mu(dataset.universe, dataset.mu)
    core_report = core_contains(game, dataset.lam)
    if nested_in_support or not core_report.member:
        verdict = PfVerdict.NOT_RATIONALIZABLE
    elif core_report.tight:
        verdict = PfVerdict.INDETERMINATE
    else:
        verdict = PfVerdict.RATIONALIZABLE
    return PfReport(verdict, nested_in_support, core_report)
