# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from sympy import Matrix

from knapsack_cryptanalysis import (
    CounterRandom,
    IntegerBasis,
    gram_schmidt,
    lll_reduce,
    shortest_vector_exhaustive,
)
from knapsack_cryptanalysis._exceptions import (
    InvalidParameterError,
    OracleGuardError,
    RankDeficiencyError,
)
from knapsack_cryptanalysis._lattice import squared_norm

WIKI_ROWS = ((1, 1, 1), (-1, 0, 2), (3, 5, 6))


def assert_reduced(basis, result):
    """Size reduction, the Lovász condition and a unimodular transform."""
    norms, mu = gram_schmidt(result.reduced)
    assert norms == result.gso_norms
    for i in range(1, len(norms)):
        assert all(abs(coeff) <= Fraction(1, 2) for coeff in mu[i])
        assert norms[i] >= (result.delta - mu[i][i - 1] ** 2) * norms[i - 1]
    transform = Matrix(result.transform)
    assert transform.det() in (1, -1)
    assert transform * Matrix(basis.rows) == Matrix(result.reduced.rows)


def test_basis_shape():
    with pytest.raises(InvalidParameterError):
        IntegerBasis(())
    with pytest.raises(InvalidParameterError):
        IntegerBasis(((1, 0),))
    basis = IntegerBasis.from_rows([[1, 2], [3, 4]])
    assert basis.rows == ((1, 2), (3, 4))
    assert basis.combine((2, -1)) == (-1, 0)


def test_gram_schmidt_identity():
    norms, mu = gram_schmidt(IntegerBasis.identity(3))
    assert norms == (1, 1, 1)
    assert all(coeff == 0 for row in mu for coeff in row)


def test_gram_schmidt_small():
    norms, mu = gram_schmidt(IntegerBasis(((1, 0), (1, 1))))
    assert norms == (1, 1)
    assert mu[1][0] == 1


def test_gram_schmidt_rank_deficient():
    with pytest.raises(RankDeficiencyError):
        gram_schmidt(IntegerBasis(((2, 0), (1, 0))))


def test_lll_identity():
    basis = IntegerBasis.identity(4)
    result = lll_reduce(basis)
    assert result.reduced == basis
    assert result.transform == basis.rows
    assert result.swaps == 0


def test_lll_known_example():
    basis = IntegerBasis(WIKI_ROWS)
    result = lll_reduce(basis, "3/4")
    assert result.reduced.rows == ((0, 1, 0), (1, 0, 1), (-1, 0, 2))
    assert result.gso_norms == (1, 2, Fraction(9, 2))
    assert result.transform[0] == (-4, -1, 1)
    assert_reduced(basis, result)
    shortest = shortest_vector_exhaustive(basis, 10)
    assert min(squared_norm(row) for row in result.reduced.rows) == squared_norm(shortest)


@pytest.mark.parametrize("order", list(permutations(range(3))))
def test_lll_permuted_reduced_basis(order):
    reduced = lll_reduce(IntegerBasis(WIKI_ROWS), "3/4").reduced
    basis = IntegerBasis(tuple(reduced.rows[i] for i in order))
    result = lll_reduce(basis, "3/4")
    assert_reduced(basis, result)
    assert abs(Matrix(result.reduced.rows).det()) == 3


@given(
    rows=st.lists(
        st.lists(st.integers(-50, 50), min_size=3, max_size=3), min_size=3, max_size=3
    ),
    delta=st.sampled_from(["51/100", "3/4", "99/100"]),
)
def test_lll_invariants(rows, delta):
    assume(Matrix(rows).det() != 0)
    basis = IntegerBasis.from_rows(rows)
    assert_reduced(basis, lll_reduce(basis, delta))


def test_lll_rank_deficient():
    with pytest.raises(RankDeficiencyError):
        lll_reduce(IntegerBasis(((1, 2), (2, 4))))


@pytest.mark.parametrize("delta", ["1/4", "1", "0", Fraction(5, 4)])
def test_lll_rejects_delta(delta):
    with pytest.raises(InvalidParameterError):
        lll_reduce(IntegerBasis.identity(2), delta)


def test_lll_large_entries():
    # entries well past 64 bits must stay exact
    big = 2**200
    basis = IntegerBasis(((1, big + 1, big + 2), (0, big, 0), (0, 0, big)))
    result = lll_reduce(basis)
    assert_reduced(basis, result)


@pytest.mark.parametrize(
    "rows, bound, norm",
    [
        (((1, 0, 0), (0, 1, 0), (0, 0, 1)), 1, 1),
        (((2, 0), (0, 3)), 2, 4),
        (((5, 3), (3, 2)), 5, 1),
    ],
)
def test_shortest_vector_exhaustive(rows, bound, norm):
    assert squared_norm(shortest_vector_exhaustive(IntegerBasis(rows), bound)) == norm


def test_shortest_vector_axis():
    assert shortest_vector_exhaustive(IntegerBasis(((2, 0), (0, 3))), 2) in ((2, 0), (-2, 0))


@pytest.mark.parametrize(
    "basis, bound",
    [
        (IntegerBasis.identity(5), 1),
        (IntegerBasis.identity(2), 0),
        (IntegerBasis.identity(2), 17),
    ],
)
def test_shortest_vector_guards(basis, bound):
    with pytest.raises(OracleGuardError):
        shortest_vector_exhaustive(basis, bound)


def _random_basis(seed):
    rng = CounterRandom(seed)
    dim = 2 + seed % 3
    while True:
        rows = [[rng.randint(-(2**32), 2**32) for _ in range(dim)] for _ in range(dim)]
        if Matrix(rows).det() != 0:
            return IntegerBasis.from_rows(rows)


@pytest.mark.parametrize("seed", range(100))
def test_first_vector_within_approximation_factor(seed):
    basis = _random_basis(seed)
    result = lll_reduce(basis)
    first = squared_norm(result.reduced.rows[0])
    # small combinations of the reduced rows bound the shortest vector from above
    shortest = squared_norm(shortest_vector_exhaustive(result.reduced, 2))
    assert shortest <= first <= 2 ** (basis.dim - 1) * shortest


@pytest.mark.parametrize("seed", range(5))
def test_lll_is_deterministic(seed):
    basis = _random_basis(seed)
    first, second = lll_reduce(basis), lll_reduce(basis)
    assert first == second
    assert first.swaps == second.swaps
    assert lll_reduce(basis, "3/4") == lll_reduce(IntegerBasis(basis.rows), "3/4")
