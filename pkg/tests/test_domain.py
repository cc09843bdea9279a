from fractions import Fraction as F

import pytest

from marginal_choice import (
    ChoiceDistribution,
    MenuDistribution,
    PreferenceOrder,
    StochasticChoiceFunction,
    Universe,
    all_orders,
    serialize_dataset,
    validate_dataset,
)
from marginal_choice.domain import bits_of, parse_probability, submasks
from marginal_choice.errors import (
    DatasetError,
    EmptyMenu,
    NegativeProbability,
    SumNotOne,
    UnknownAlternative,
)

A, B, C = 1, 2, 4


def test_parse_probability_exact_decimal():
    assert parse_probability("0.1") == F(1, 10)
    assert parse_probability("1/3") == F(1, 3)
    assert parse_probability(1) == F(1)
    assert parse_probability("0.15") == F(3, 20)


def test_parse_probability_rejects_floats_and_junk():
    with pytest.raises(DatasetError):
        parse_probability(0.1)
    with pytest.raises(DatasetError):
        parse_probability("abc")
    with pytest.raises(DatasetError):
        parse_probability(True)


def test_bits_and_submasks():
    assert list(bits_of(0b1011)) == [0, 1, 3]
    assert sorted(submasks(0b101)) == [0, 0b001, 0b100, 0b101]
    assert len(list(submasks(0b111))) == 8


def test_universe_validation():
    u = Universe(("a", "b", "c"))
    assert u.n == 3 and u.full_mask == 7
    assert u.parse_menu("b, a") == A | B
    assert u.menu_label(A | C) == "a,c"
    with pytest.raises(DatasetError):
        Universe(("a", "a"))
    with pytest.raises(DatasetError):
        Universe(())
    with pytest.raises(UnknownAlternative):
        u.index("z")
    with pytest.raises(EmptyMenu):
        u.menu_from_labels([])


def test_universe_size_cap(monkeypatch):
    labels = tuple(f"x{i}" for i in range(25))
    with pytest.raises(DatasetError):
        Universe(labels)
    monkeypatch.setenv("MARGINAL_CHOICE_MAX_N", "30")
    assert Universe(labels).n == 25


def test_menu_distribution_invariants():
    mu = MenuDistribution({A: F(1, 2), B: F(1, 2), C: F(0)})
    assert mu.support == (A, B)  # zero-weight menus dropped
    assert mu[C] == 0
    assert mu.union_mask() == A | B
    with pytest.raises(SumNotOne) as err:
        MenuDistribution({A: F(3, 5), B: F(1, 2)})
    assert err.value.deviation == F(1, 10)
    with pytest.raises(NegativeProbability):
        MenuDistribution({A: F(3, 2), B: F(-1, 2)})
    with pytest.raises(EmptyMenu):
        MenuDistribution({0: F(1)})


def test_choice_distribution_invariants():
    lam = ChoiceDistribution((F(1, 2), F(0), F(1, 2)))
    assert lam.mass(A | B) == F(1, 2)
    assert lam.support_mask == A | C
    with pytest.raises(SumNotOne):
        ChoiceDistribution((F(1, 2), F(1, 4)))


def test_preference_order():
    order = PreferenceOrder((2, 0, 1))
    assert order.top_of(A | B) == 0
    assert order.top_of(B) == 1
    assert order.lower_contour_mask(0) == B
    assert order.lower_contour_mask(2) == A | B
    assert order.label(Universe(("a", "b", "c"))) == "c>a>b"
    with pytest.raises(DatasetError):
        PreferenceOrder((0, 0, 1))
    assert len(list(all_orders(3))) == 6


def test_stochastic_choice_function_marginal():
    mu = MenuDistribution({A | B: F(1, 2), A: F(1, 2)})
    pi = StochasticChoiceFunction(
        {
            A | B: ChoiceDistribution((F(1, 2), F(1, 2))),
            A: ChoiceDistribution((F(1), F(0))),
        }
    )
    assert pi.marginal(mu, 2).probs == (F(3, 4), F(1, 4))
    with pytest.raises(DatasetError):
        StochasticChoiceFunction({A: ChoiceDistribution((F(0), F(1)))})


def test_validate_dataset_full_menu():
    ds = validate_dataset(
        {
            "alternatives": ["a", "b", "c"],
            "mu": {"a,b,c": "1"},
            "lambda": {"a": "1/3", "b": "1/3", "c": "1/3"},
        }
    )
    assert ds.mu.support == (7,)
    assert ds.lam.probs == (F(1, 3),) * 3


def test_validate_dataset_figure_weights(fig1_dataset):
    raw = serialize_dataset(fig1_dataset)
    assert validate_dataset(raw) == fig1_dataset  # round-trip


def test_validate_dataset_sum_error():
    with pytest.raises(SumNotOne) as err:
        validate_dataset(
            {
                "alternatives": ["a", "b"],
                "mu": {"a": "0.6", "b": "0.5"},
                "lambda": {"a": "1/2", "b": "1/2"},
            }
        )
    assert err.value.deviation == F(1, 10)


def test_validate_dataset_missing_keys():
    with pytest.raises(DatasetError):
        validate_dataset({"mu": {}, "lambda": {}})
    with pytest.raises(DatasetError):
        validate_dataset({"alternatives": ["a"], "lambda": {"a": "1"}})
