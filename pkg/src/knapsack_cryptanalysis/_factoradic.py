# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors

"""
Factorial number system and Lehmer-code permutations.

Digit ``d[j]`` (0-based ``j``) carries weight ``(g - 1 - j)!`` and is consumed at step ``j``
of the decode, where it indexes the list of positions not yet taken. Positions are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import TYPE_CHECKING

from ._exceptions import FactorialRangeError, InvalidParameterError

if TYPE_CHECKING:
    from collections.abc import Sequence


@dataclass(frozen=True)
class FactorialDigits:
    digits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        if not self.digits:
            raise InvalidParameterError("Factorial digits need g >= 1.")
        g = len(self.digits)
        for j, digit in enumerate(self.digits):
            if not 0 <= digit <= g - 1 - j:
                raise FactorialRangeError(
                    f"Digit {j} is {digit}, outside [0, {g - 1 - j}] for g={g}."
                )

    @property
    def g(self) -> int:
        return len(self.digits)


@dataclass(frozen=True)
class SelectionMap:
    """First ``c`` entries of a permuted vector, with their source positions."""

    values: tuple[int, ...]
    positions: tuple[int, ...]
    source_len: int

    def __post_init__(self):
        if len(self.values) != len(self.positions):
            raise InvalidParameterError("Every selected value needs a source position.")
        if len(set(self.positions)) != len(self.positions):
            raise InvalidParameterError("Source positions must be distinct.")
        if any(not 0 <= position < self.source_len for position in self.positions):
            raise InvalidParameterError(f"Source positions must lie in [0, {self.source_len}).")

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.values, self.positions))


def to_factorial_digits(m: int, g: int) -> FactorialDigits:
    if g < 1:
        raise InvalidParameterError(f"'g' must be at least 1, got {g}.")
    if not 0 <= m < factorial(g):
        raise FactorialRangeError(f"{m} is outside [0, {g}!).")
    digits = [0] * g
    # digit j has radix g - j; peel from the least significant end
    for j in range(g - 1, -1, -1):
        m, digits[j] = divmod(m, g - j)
    return FactorialDigits(tuple(digits))


def from_factorial_digits(d: FactorialDigits) -> int:
    value = 0
    for j, digit in enumerate(d.digits):
        value = value * (d.g - j) + digit
    return value


def decode_permutation(d: FactorialDigits) -> tuple[int, ...]:
    """Lehmer decode into a permutation of ``range(g)``."""
    remaining = list(range(d.g))
    return tuple(remaining.pop(digit) for digit in d.digits)


def apply_selection(vector: Sequence[int], d: FactorialDigits, take: int) -> SelectionMap:
    if len(vector) != d.g:
        raise InvalidParameterError(f"Vector has {len(vector)} entries, digits expect {d.g}.")
    if not 1 <= take <= d.g:
        raise InvalidParameterError(f"Cannot take {take} of {d.g} entries.")
    positions = decode_permutation(d)[:take]
    return SelectionMap(
        values=tuple(vector[position] for position in positions),
        positions=positions,
        source_len=d.g,
    )
