"""Shared fixtures: the worked examples used throughout the suite.

Menu bitmasks use bit 0 = "a", bit 1 = "b", bit 2 = "c".
"""

from fractions import Fraction as F

import pytest

from marginal_choice import (
    ChoiceDistribution,
    FeasibleCollection,
    MarginalDataset,
    MenuDistribution,
    StarDataset,
    Universe,
)

A, B, C = 1, 2, 4


@pytest.fixture
def universe3():
    return Universe(("a", "b", "c"))


@pytest.fixture
def universe2():
    return Universe(("a", "b"))


@pytest.fixture
def ex1_mu():
    # 1/4 on each of {a,b}, {a,c}, {b,c}, and the full set.
    return MenuDistribution(
        {A | B: F(1, 4), A | C: F(1, 4), B | C: F(1, 4), A | B | C: F(1, 4)}
    )


@pytest.fixture
def uniform3():
    return ChoiceDistribution((F(1, 3), F(1, 3), F(1, 3)))


@pytest.fixture
def ex1_dataset(universe3, ex1_mu, uniform3):
    return MarginalDataset(universe3, ex1_mu, uniform3)


@pytest.fixture
def fig1_mu():
    # Weights 0.1/0.1/0.15 on singletons, 0.3/0.1/0.1 on pairs, 0.15 on the
    # full set (the last weight is forced by the sum-to-one constraint and
    # matches the plotted constraint lines).
    return MenuDistribution(
        {
            A: F(1, 10),
            B: F(1, 10),
            C: F(3, 20),
            A | B: F(3, 10),
            A | C: F(1, 10),
            B | C: F(1, 10),
            A | B | C: F(3, 20),
        }
    )


@pytest.fixture
def fig1_dataset(universe3, fig1_mu, uniform3):
    return MarginalDataset(universe3, fig1_mu, uniform3)


@pytest.fixture
def ex2_star(universe2):
    # n = 2 with outside option: 1/3 on each of {a,x*}, {b,x*}, {a,b,x*};
    # choices 1/3 each on a, b, x*.
    mu = MenuDistribution({A: F(1, 3), B: F(1, 3), A | B: F(1, 3)})
    return StarDataset(universe2, mu, (F(1, 3), F(1, 3)), F(1, 3))


@pytest.fixture
def ex3_collection():
    return FeasibleCollection(frozenset({A, C, A | B, B | C, A | B | C}))


@pytest.fixture
def fig3_mu():
    return MenuDistribution(
        {A: F(1, 4), C: F(1, 4), A | B: F(1, 4), B | C: F(1, 4)}
    )


@pytest.fixture
def fig3_lambda():
    return ChoiceDistribution((F(1, 4), F(1, 2), F(1, 4)))
