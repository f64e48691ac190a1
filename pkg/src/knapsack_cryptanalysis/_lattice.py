# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors

"""
Exact lattice basis reduction.

`lll_reduce` keeps the Gram-Schmidt data as integers: ``d[i]`` is the Gram determinant of the
first ``i`` rows and ``lam[k][j] = d[j + 1] * mu[k][j]``. Every division in the update rules is
exact, so the reduction never leaves the integers and never touches floating point.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import TYPE_CHECKING

from ._constants import DEFAULT_DELTA, EXHAUSTIVE_MAX_BOUND, EXHAUSTIVE_MAX_DIM
from ._exceptions import InvalidParameterError, OracleGuardError, RankDeficiencyError

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    try:
        from typing import Self
    except ImportError:  # py 3.11+ required for Self
        from typing_extensions import Self

log = logging.getLogger(__name__)

Matrix = tuple[tuple[int, ...], ...]


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(u, v))


def squared_norm(v: Sequence[int]) -> int:
    return dot(v, v)


@dataclass(frozen=True)
class IntegerBasis:
    """Square integer matrix whose rows generate a lattice."""

    rows: Matrix

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise InvalidParameterError("A basis needs at least one row.")
        if any(len(row) != len(rows) for row in rows):
            raise InvalidParameterError(f"Only square bases are supported, got {len(rows)} rows.")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> Self:
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, dim: int) -> Self:
        return cls(tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def combine(self, coefficients: Sequence[int]) -> tuple[int, ...]:
        """The lattice vector ``sum(coefficients[i] * rows[i])``."""
        return tuple(
            sum(coeff * row[col] for coeff, row in zip(coefficients, self.rows))
            for col in range(self.dim)
        )


@dataclass(frozen=True)
class ReductionResult:
    reduced: IntegerBasis
    #: Unimodular matrix with ``transform @ input == reduced``.
    transform: Matrix
    gso_norms: tuple[Fraction, ...]
    delta: Fraction = DEFAULT_DELTA
    swaps: int = field(default=0, compare=False)


def gram_schmidt(
    basis: IntegerBasis,
) -> tuple[tuple[Fraction, ...], tuple[tuple[Fraction, ...], ...]]:
    """
    Exact Gram-Schmidt orthogonalisation.

    :returns: The squared norms ``B[i]`` of the orthogonal vectors, and the coefficients as a
        strictly lower triangular table: ``mu[i][j]`` for ``j < i``, so ``mu[0]`` is empty.
    :raises RankDeficiencyError: if a row lies in the span of the rows before it.
    """
    ortho: list[list[Fraction]] = []
    norms: list[Fraction] = []
    mu: list[tuple[Fraction, ...]] = []
    for i, row in enumerate(basis.rows):
        star = [Fraction(x) for x in row]
        coefficients = []
        for j in range(i):
            coeff = sum((x * y for x, y in zip(row, ortho[j])), Fraction(0)) / norms[j]
            coefficients.append(coeff)
            star = [s - coeff * o for s, o in zip(star, ortho[j])]
        norm = sum((s * s for s in star), Fraction(0))
        if norm == 0:
            raise RankDeficiencyError(f"Row {i} is linearly dependent on the rows before it.")
        ortho.append(star)
        norms.append(norm)
        mu.append(tuple(coefficients))
    return tuple(norms), tuple(mu)


class _IntegralLLL:
    def __init__(self, basis: IntegerBasis, delta: Fraction) -> None:
        n = basis.dim
        self.n = n
        self.alpha, self.beta = delta.numerator, delta.denominator
        self.b = [list(row) for row in basis.rows]
        self.h = [[int(i == j) for j in range(n)] for i in range(n)]
        self.d = [1] + [0] * n
        self.lam = [[0] * n for _ in range(n)]
        self.swaps = 0

    def _extend(self, k: int) -> None:
        b, d, lam = self.b, self.d, self.lam
        for j in range(k + 1):
            u = dot(b[k], b[j])
            for i in range(j):
                u = (d[i + 1] * u - lam[k][i] * lam[j][i]) // d[i]
            if j < k:
                lam[k][j] = u
            elif u == 0:
                raise RankDeficiencyError(f"Row {k} is linearly dependent on the rows before it.")
            else:
                d[k + 1] = u

    def _size_reduce(self, k: int, l: int) -> None:  # noqa: E741
        d, lam = self.d, self.lam
        if 2 * abs(lam[k][l]) <= d[l + 1]:
            return
        q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
        self.b[k] = [x - q * y for x, y in zip(self.b[k], self.b[l])]
        self.h[k] = [x - q * y for x, y in zip(self.h[k], self.h[l])]
        lam[k][l] -= q * d[l + 1]
        for i in range(l):
            lam[k][i] -= q * lam[l][i]

    def _swap(self, k: int, kmax: int) -> None:
        b, h, d, lam = self.b, self.h, self.d, self.lam
        b[k], b[k - 1] = b[k - 1], b[k]
        h[k], h[k - 1] = h[k - 1], h[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lmb = lam[k][k - 1]
        new_d = (d[k - 1] * d[k + 1] + lmb * lmb) // d[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lmb * t) // d[k]
            lam[i][k - 1] = (new_d * t + lmb * lam[i][k]) // d[k + 1]
        d[k] = new_d
        self.swaps += 1

    def _lovasz_fails(self, k: int) -> bool:
        d, lam = self.d, self.lam
        lhs = self.beta * d[k + 1] * d[k - 1]
        return lhs < self.alpha * d[k] ** 2 - self.beta * lam[k][k - 1] ** 2

    def run(self) -> None:
        self._extend(0)
        k, kmax = 1, 0
        while k < self.n:
            if k > kmax:
                kmax = k
                self._extend(k)
            self._size_reduce(k, k - 1)
            if self._lovasz_fails(k):
                self._swap(k, kmax)
                k = max(1, k - 1)
            else:
                for l in range(k - 2, -1, -1):  # noqa: E741
                    self._size_reduce(k, l)
                k += 1


def check_delta(delta: Fraction | str | int) -> Fraction:
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise InvalidParameterError(f"LLL parameter must lie in (1/4, 1), got {delta}.")
    return delta


def lll_reduce(basis: IntegerBasis, delta: Fraction | str = DEFAULT_DELTA) -> ReductionResult:
    """
    LLL-reduce ``basis`` with exact arithmetic and track the unimodular transform.

    :param basis: Square, full-rank integer basis.
    :param delta: Lovász parameter in ``(1/4, 1)``, as a ``Fraction`` or a string like "3/4".
    :raises RankDeficiencyError: if the rows are linearly dependent.
    """
    delta = check_delta(delta)
    state = _IntegralLLL(basis, delta)
    state.run()
    d = state.d
    log.debug("Reduced a %d-dimensional basis with %d swaps", basis.dim, state.swaps)
    return ReductionResult(
        reduced=IntegerBasis.from_rows(state.b),
        transform=tuple(tuple(row) for row in state.h),
        gso_norms=tuple(Fraction(d[i + 1], d[i]) for i in range(basis.dim)),
        delta=delta,
        swaps=state.swaps,
    )


def shortest_vector_exhaustive(basis: IntegerBasis, coeff_bound: int) -> tuple[int, ...]:
    """
    Shortest nonzero combination with every coefficient in ``[-coeff_bound, coeff_bound]``.

    Test oracle only: refuses dimensions above 4 and bounds above 16.
    """
    if basis.dim > EXHAUSTIVE_MAX_DIM:
        raise OracleGuardError(f"Exhaustive search is limited to dimension {EXHAUSTIVE_MAX_DIM}.")
    if not 1 <= coeff_bound <= EXHAUSTIVE_MAX_BOUND:
        raise OracleGuardError(f"Coefficient bound must lie in [1, {EXHAUSTIVE_MAX_BOUND}].")
    best: tuple[int, ...] | None = None
    best_norm = 0
    for coefficients in product(range(-coeff_bound, coeff_bound + 1), repeat=basis.dim):
        if not any(coefficients):
            continue
        vector = basis.combine(coefficients)
        norm = squared_norm(vector)
        if best is None or norm < best_norm:
            best, best_norm = vector, norm
    assert best is not None
    return best
