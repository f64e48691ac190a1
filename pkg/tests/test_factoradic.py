# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors

from itertools import permutations
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from knapsack_cryptanalysis import (
    FactorialDigits,
    SelectionMap,
    apply_selection,
    decode_permutation,
    from_factorial_digits,
    to_factorial_digits,
)
from knapsack_cryptanalysis._exceptions import FactorialRangeError, InvalidParameterError


@pytest.mark.parametrize(
    "m, g, digits",
    [
        (6, 8, (0, 0, 0, 0, 1, 0, 0, 0)),
        (0, 4, (0, 0, 0, 0)),
        (5, 3, (2, 1, 0)),
        (1, 3, (0, 1, 0)),
        (6, 5, (0, 1, 0, 0, 0)),
        (0, 1, (0,)),
    ],
)
def test_factorial_digits(m, g, digits):
    assert to_factorial_digits(m, g).digits == digits
    assert from_factorial_digits(FactorialDigits(digits)) == m


@pytest.mark.parametrize("m, g", [(6, 3), (1, 1), (-1, 4)])
def test_factorial_digits_out_of_range(m, g):
    with pytest.raises(FactorialRangeError):
        to_factorial_digits(m, g)


def test_factorial_digits_reject_bad_digit():
    # the last digit always has radix 1
    with pytest.raises(FactorialRangeError):
        FactorialDigits((0, 0, 1))
    with pytest.raises(InvalidParameterError):
        FactorialDigits(())
    with pytest.raises(InvalidParameterError):
        to_factorial_digits(0, 0)


@pytest.mark.parametrize("g", range(1, 9))
def test_factorial_digits_bijection(g):
    seen = set()
    for m in range(factorial(g)):
        digits = to_factorial_digits(m, g)
        assert from_factorial_digits(digits) == m
        seen.add(decode_permutation(digits))
    assert len(seen) == factorial(g)


@given(g=st.integers(1, 170), data=st.data())
def test_decode_permutation_is_bijection(g, data):
    m = data.draw(st.integers(0, factorial(g) - 1))
    digits = to_factorial_digits(m, g)
    assert from_factorial_digits(digits) == m
    assert sorted(decode_permutation(digits)) == list(range(g))


def test_decode_permutation_transposes_middle():
    labels = ("E5", "E4", "E3", "E2", "E1")
    order = decode_permutation(to_factorial_digits(6, 5))
    assert tuple(labels[i] for i in order) == ("E5", "E3", "E4", "E2", "E1")


def test_decode_permutation_swaps_last_pair():
    labels = ("E3", "E2", "E1")
    order = decode_permutation(to_factorial_digits(1, 3))
    assert tuple(labels[i] for i in order) == ("E3", "E1", "E2")


def test_decode_permutation_identity():
    assert decode_permutation(to_factorial_digits(0, 6)) == tuple(range(6))


@pytest.mark.parametrize("g", range(1, 7))
def test_decode_permutation_is_lexicographic_rank(g):
    # Lehmer codes enumerate permutations in lexicographic order
    expected = list(permutations(range(g)))
    digits = [to_factorial_digits(m, g).digits for m in range(factorial(g))]
    assert [decode_permutation(FactorialDigits(d)) for d in digits] == expected
    assert digits == sorted(digits)


def test_first_six_orderings():
    labels = ("E6", "E5", "E4", "E3", "E2", "E1")
    listing = [
        ("E6", "E5", "E4", "E3", "E2", "E1"),
        ("E6", "E5", "E4", "E3", "E1", "E2"),
        ("E6", "E5", "E4", "E2", "E3", "E1"),
        ("E6", "E5", "E4", "E2", "E1", "E3"),
        ("E6", "E5", "E4", "E1", "E3", "E2"),
        ("E6", "E5", "E4", "E1", "E2", "E3"),
    ]
    for m, expected in enumerate(listing):
        order = decode_permutation(to_factorial_digits(m, 6))
        assert tuple(labels[i] for i in order) == expected


def test_apply_selection():
    selection = apply_selection((10, 20, 30, 40, 50), to_factorial_digits(6, 5), 3)
    assert selection.values == (10, 30, 20)
    assert selection.positions == (0, 2, 1)
    assert selection.pairs() == [(10, 0), (30, 2), (20, 1)]

    selection = apply_selection((10, 20, 30), to_factorial_digits(5, 3), 2)
    assert selection.values == (30, 20)
    assert selection.positions == (2, 1)


def test_apply_selection_identity():
    vector = (4, 8, 15, 16)
    selection = apply_selection(vector, to_factorial_digits(0, 4), 4)
    assert selection.values == vector
    assert selection.positions == (0, 1, 2, 3)


@pytest.mark.parametrize("take", [0, 4])
def test_apply_selection_rejects_take(take):
    with pytest.raises(InvalidParameterError):
        apply_selection((1, 2, 3), to_factorial_digits(0, 3), take)


def test_apply_selection_rejects_length():
    with pytest.raises(InvalidParameterError):
        apply_selection((1, 2), to_factorial_digits(0, 3), 1)


def test_selection_map_checks_positions():
    with pytest.raises(InvalidParameterError):
        SelectionMap(values=(1, 2), positions=(0, 0), source_len=3)
    with pytest.raises(InvalidParameterError):
        SelectionMap(values=(1,), positions=(3,), source_len=3)
    with pytest.raises(InvalidParameterError):
        SelectionMap(values=(1, 2), positions=(0,), source_len=3)
