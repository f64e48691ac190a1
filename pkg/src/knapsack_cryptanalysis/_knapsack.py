# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors

"""
Superincreasing sequences, subset-sum solvers and the basic Merkle-Hellman cryptosystem.

The public knapsack is derived with the identity permutation: ``a[i] = b[i] * w mod p``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import TYPE_CHECKING

from sympy import mod_inverse

from ._constants import BRUTE_FORCE_MAX_LEN
from ._envelope import CiphertextEnvelope, bytes_to_bits, join_blocks, split_blocks
from ._exceptions import (
    DecryptionError,
    InvalidParameterError,
    NotSuperincreasingError,
    OracleGuardError,
)

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence
    from random import Random

    try:
        from typing import Self
    except ImportError:  # py 3.11+ required for Self
        from typing_extensions import Self

log = logging.getLogger(__name__)

#: Ordered 0/1 entries, one per knapsack element.
BitVector = tuple[int, ...]


def _check_bits(bits: Sequence[int], length: int) -> None:
    if len(bits) != length:
        raise InvalidParameterError(
            f"Bit vector has length {len(bits)} but the knapsack has {length} elements."
        )
    if any(bit not in (0, 1) for bit in bits):
        raise InvalidParameterError(f"Bit vector entries must be 0 or 1: {tuple(bits)}.")


def is_superincreasing(values: Iterable[int]) -> bool:
    """Every element is positive and exceeds the sum of all the elements before it."""
    total = 0
    for value in values:
        if value <= total:
            return False
        total += value
    return True


def count_superincreasing_prefix(values: Iterable[int]) -> int:
    """Number of leading elements that satisfy the superincreasing condition."""
    total = count = 0
    for value in values:
        if value <= total:
            break
        total += value
        count += 1
    return count


@dataclass(frozen=True)
class SuperincreasingSequence:
    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if not self.elements:
            raise InvalidParameterError("A superincreasing sequence needs at least one element.")
        if not is_superincreasing(self.elements):
            raise NotSuperincreasingError(
                f"Elements are not superincreasing: {self.elements[:8]}"
                f"{'...' if len(self.elements) > 8 else ''}"
            )

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, index: int) -> int:
        return self.elements[index]

    @property
    def total(self) -> int:
        return sum(self.elements)


@dataclass(frozen=True)
class MHParams:
    """Size parameters of a basic Merkle-Hellman key."""

    n: int
    gap_bits: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameterError(f"'n' must be at least 1, got {self.n}.")
        if self.gap_bits < 1:
            raise InvalidParameterError(f"'gap_bits' must be at least 1, got {self.gap_bits}.")


@dataclass(frozen=True)
class PublicKnapsack:
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        if any(value < 0 for value in self.a):
            raise InvalidParameterError("Public knapsack elements must be non-negative.")

    def __len__(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class MHPrivateKey:
    b: SuperincreasingSequence
    p: int
    w: int
    w_inv: int

    def __post_init__(self):
        if self.p <= self.b.total:
            raise InvalidParameterError(
                f"Modulus {self.p} must exceed the sum of the sequence ({self.b.total})."
            )
        if not 1 <= self.w < self.p or gcd(self.w, self.p) != 1:
            raise InvalidParameterError("Multiplier must be a unit in [1, p).")
        if not 1 <= self.w_inv < self.p or (self.w * self.w_inv) % self.p != 1:
            raise InvalidParameterError("'w_inv' is not the inverse of 'w' modulo 'p'.")

    @classmethod
    def from_parts(cls, b: Iterable[int], p: int, w: int) -> Self:
        """Build a key from explicit material, deriving ``w_inv``."""
        sequence = SuperincreasingSequence(tuple(b))
        if not 1 <= w < p or gcd(w, p) != 1:
            raise InvalidParameterError(f"Multiplier {w} is not a unit modulo {p}.")
        return cls(b=sequence, p=p, w=w, w_inv=int(mod_inverse(w, p)))

    @property
    def n(self) -> int:
        return len(self.b)

    def public_key(self) -> PublicKnapsack:
        return PublicKnapsack(tuple(value * self.w % self.p for value in self.b))


def gen_superincreasing(n: int, gap_bits: int, rng: Random) -> SuperincreasingSequence:
    """
    Sample a superincreasing sequence where every element exceeds the running sum by a
    uniform gap in ``[1, 2**gap_bits]``.
    """
    MHParams(n=n, gap_bits=gap_bits)
    gap = 1 << gap_bits
    elements = []
    total = 0
    for _ in range(n):
        value = total + rng.randint(1, gap)
        elements.append(value)
        total += value
    return SuperincreasingSequence(tuple(elements))


def keygen_from_sequence(
    b: SuperincreasingSequence, rng: Random
) -> tuple[MHPrivateKey, PublicKnapsack]:
    total = b.total
    p = rng.randint(total + 1, 2 * total)
    while True:
        w = rng.randint(1, p - 1)
        if gcd(w, p) == 1:
            break
    key = MHPrivateKey.from_parts(b.elements, p, w)
    log.debug("Generated key with n=%d and a %d-bit modulus", len(b), p.bit_length())
    return key, key.public_key()


def mh_keygen(n: int, gap_bits: int, rng: Random) -> tuple[MHPrivateKey, PublicKnapsack]:
    """
    Generate a basic Merkle-Hellman key pair.

    :param n: Number of knapsack elements.
    :param gap_bits: Bit size of the random gap added to each running sum.
    :param rng: Random stream; the same seed always produces the same keys.
    :returns: The private key and the public knapsack ``a[i] = b[i] * w mod p``.
    """
    return keygen_from_sequence(gen_superincreasing(n, gap_bits, rng), rng)


def mh_key_from_parts(b: Iterable[int], p: int, w: int) -> tuple[MHPrivateKey, PublicKnapsack]:
    key = MHPrivateKey.from_parts(b, p, w)
    return key, key.public_key()


def encrypt_mh(pub: PublicKnapsack, m: Sequence[int]) -> int:
    _check_bits(m, len(pub.a))
    return sum(value for value, bit in zip(pub.a, m) if bit)


def solve_superincreasing(b: SuperincreasingSequence, target: int) -> BitVector | None:
    """
    Greedy solver: walk from the largest element down, taking it whenever it fits.

    :returns: The unique solution, or None if the residual does not reach zero.
    """
    bits = [0] * len(b)
    remaining = target
    for index in range(len(b) - 1, -1, -1):
        if b[index] <= remaining:
            bits[index] = 1
            remaining -= b[index]
    if remaining:
        return None
    return tuple(bits)


def solve_selected_multiset(
    values_with_positions: Sequence[tuple[int, int]], target: int
) -> BitVector | None:
    """
    Solve a subset sum over a permuted selection of superincreasing values.

    The values are sorted descending, solved greedily, and the chosen entries are mapped back,
    so ``bits[j]`` refers to ``values_with_positions[j]``.

    :raises NotSuperincreasingError: if the values, sorted ascending, are not superincreasing.
    """
    order = sorted(
        range(len(values_with_positions)),
        key=lambda j: values_with_positions[j],
        reverse=True,
    )
    if not is_superincreasing(values_with_positions[j][0] for j in reversed(order)):
        raise NotSuperincreasingError("Sorted selection is not superincreasing.")
    bits = [0] * len(values_with_positions)
    remaining = target
    for j in order:
        value = values_with_positions[j][0]
        if value <= remaining:
            bits[j] = 1
            remaining -= value
    if remaining:
        return None
    return tuple(bits)


def brute_force_subset_sum(values: Sequence[int], target: int) -> list[BitVector]:
    """Every 0/1 vector whose weighted sum equals ``target``, in lexicographic order."""
    if len(values) > BRUTE_FORCE_MAX_LEN:
        raise OracleGuardError(
            f"Brute force is limited to {BRUTE_FORCE_MAX_LEN} values, got {len(values)}."
        )
    return [
        bits
        for bits in product((0, 1), repeat=len(values))
        if sum(value for value, bit in zip(values, bits) if bit) == target
    ]


def decrypt_mh(priv: MHPrivateKey, c: int) -> BitVector | None:
    d = c * priv.w_inv % priv.p
    return solve_superincreasing(priv.b, d)


def mh_encrypt_message(pub: PublicKnapsack, message: bytes) -> CiphertextEnvelope:
    """Encrypt a byte message in blocks of ``len(pub)`` bits."""
    if not message:
        raise InvalidParameterError("Message is empty.")
    bits = bytes_to_bits(message)
    blocks = tuple(encrypt_mh(pub, block) for block in split_blocks(bits, len(pub.a)))
    return CiphertextEnvelope(blocks=blocks, msg_bit_len=len(bits))


def mh_decrypt_message(priv: MHPrivateKey, env: CiphertextEnvelope) -> bytes:
    if env.d_prime is not None:
        raise InvalidParameterError("Envelope carries a permutation selector; not MH traffic.")
    env.check_block_len(priv.n)
    pub = priv.public_key()
    recovered = []
    for index, c in enumerate(env.blocks):
        bits = decrypt_mh(priv, c)
        # a foreign key can still leave a zero residual; its bits then miss the ciphertext
        if bits is None or encrypt_mh(pub, bits) != c:
            raise DecryptionError(f"Block {index} is not decryptable with this key.")
        recovered.append(bits)
    return join_blocks(recovered, env.msg_bit_len)
