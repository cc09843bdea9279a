"""Exception hierarchy shared by all analysis modules."""

from __future__ import annotations


class MarginalChoiceError(Exception):
    """Base class for all errors raised by this package."""


class DatasetError(MarginalChoiceError):
    """Invalid dataset or parameter input."""


class EmptyMenu(DatasetError):
    pass


class NegativeProbability(DatasetError):
    pass


class SumNotOne(DatasetError):
    """Probabilities do not sum to one; carries the exact deviation."""

    def __init__(self, deviation, what="probabilities"):
        self.deviation = deviation
        super().__init__(f"{what} sum to 1 + ({deviation}); expected exactly 1")


class UnknownAlternative(DatasetError):
    pass


class UniverseMismatch(DatasetError):
    pass


class SameAlternative(DatasetError):
    pass


class InvalidParameters(DatasetError):
    pass


class NotConvex(MarginalChoiceError):
    pass


class TooManyOrders(MarginalChoiceError):
    pass


class TooLarge(MarginalChoiceError):
    pass


class NotInCore(MarginalChoiceError):
    pass


class NotRationalizable(MarginalChoiceError):
    """Carries the core-membership report naming the violated constraints."""

    def __init__(self, report, message="dataset is not rationalizable"):
        self.report = report
        super().__init__(message)


class PairSupportMissing(MarginalChoiceError):
    """A doubleton menu required by the hypothesis has zero mass."""

    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"menu {{{pair[0]}, {pair[1]}}} has zero probability")


class DegenerateDenominator(MarginalChoiceError):
    pass


class PairCoverageMissing(MarginalChoiceError):
    """Some pair of alternatives is contained in no support menu."""

    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"no support menu contains both {pair[0]} and {pair[1]}")


class NotInterior(MarginalChoiceError):
    pass


class NoConvergence(MarginalChoiceError):
    def __init__(self, residual, iterations):
        self.residual = residual
        self.iterations = iterations
        super().__init__(
            f"no convergence after {iterations} iterations; residual {residual:.3e}"
        )


class SingletonSupportMissing(MarginalChoiceError):
    """The menu {a, x*} has zero mass for the named alternative."""

    def __init__(self, alternative):
        self.alternative = alternative
        super().__init__(f"menu {{{alternative}, x*}} has zero probability")


class SupportOutsideCollection(MarginalChoiceError):
    pass


class NotPotentiallyRationalizable(MarginalChoiceError):
    pass


class TieEncountered(MarginalChoiceError):
    pass
