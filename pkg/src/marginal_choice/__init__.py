"""Rationalizability analysis for marginal stochastic choice data.

The observable is a pair of marginals: a distribution over menus and a
distribution over chosen alternatives, without the joint.  This package
decides whether such a pair is consistent with stochastic choice at all,
and with random utility, Luce, independent-consideration, and two-stage
(temptation / flexibility) models, recovering parameters where they are
identified.  All verdicts are exact: probabilities are rationals
end-to-end.
"""

from .availability import (
    AvailabilityVector,
    construct_mu,
    induced_availability,
    potentially_rationalizable,
)
from .core_geometry import (
    CoreMembershipReport,
    all_extreme_points,
    core_contains,
    extreme_point,
    interior_test,
)
from .domain import (
    ChoiceDistribution,
    MarginalDataset,
    MenuDistribution,
    PreferenceOrder,
    StochasticChoiceFunction,
    Universe,
    all_orders,
    serialize_dataset,
    validate_dataset,
)
from .errors import (
    DatasetError,
    MarginalChoiceError,
    NotRationalizable,
)
from .flow import FlowProblem, FlowResult, rationalize, solve_flow
from .games import (
    CooperativeGame,
    GameClassification,
    MobiusVector,
    classify,
    game_from_mu,
    mobius,
)
from .generators import gen_ircs, gen_luce, gen_rum, gen_tsc
from .ircs import IrcsSolution, StarDataset, ircs_forward, ircs_rationalize
from .luce import (
    LuceInversion,
    LuceWeights,
    exchangeable,
    luce_forward,
    luce_invert,
)
from .rum import (
    OrderDistribution,
    induced_choice,
    inferior_chain,
    inferior_test,
    rum_rationalize,
    superiority_bound,
    unique_rum,
)
from .twostage import (
    FeasibleCollection,
    PfReport,
    PfVerdict,
    RedundancyReport,
    TscVerdict,
    analyze_collection,
    game_tsc,
    pf_rationalize,
    tsc_rationalize,
)

__version__ = "1.0.0"

__all__ = [
    "AvailabilityVector",
    "ChoiceDistribution",
    "CooperativeGame",
    "CoreMembershipReport",
    "DatasetError",
    "FeasibleCollection",
    "FlowProblem",
    "FlowResult",
    "GameClassification",
    "IrcsSolution",
    "LuceInversion",
    "LuceWeights",
    "MarginalChoiceError",
    "MarginalDataset",
    "MenuDistribution",
    "MobiusVector",
    "NotRationalizable",
    "OrderDistribution",
    "PfReport",
    "PfVerdict",
    "PreferenceOrder",
    "RedundancyReport",
    "StarDataset",
    "StochasticChoiceFunction",
    "TscVerdict",
    "Universe",
    "all_extreme_points",
    "all_orders",
    "analyze_collection",
    "classify",
    "construct_mu",
    "core_contains",
    "exchangeable",
    "extreme_point",
    "game_from_mu",
    "game_tsc",
    "gen_ircs",
    "gen_luce",
    "gen_rum",
    "gen_tsc",
    "induced_availability",
    "induced_choice",
    "inferior_chain",
    "inferior_test",
    "interior_test",
    "ircs_forward",
    "ircs_rationalize",
    "luce_forward",
    "luce_invert",
    "mobius",
    "pf_rationalize",
    "potentially_rationalizable",
    "rationalize",
    "rum_rationalize",
    "serialize_dataset",
    "solve_flow",
    "superiority_bound",
    "tsc_rationalize",
    "unique_rum",
    "validate_dataset",
]
