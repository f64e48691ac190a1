# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors

"""
Permutation-combination knapsack cryptosystem.

The ``n = s * g`` element key is split into ``s`` subsets of ``g`` elements. A digest of the
message selects a permutation, the same permutation reorders every subset, and the first ``c``
entries of each form the ``s * c`` element working knapsack that encrypts each block.
"""

from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass
from math import factorial
from typing import TYPE_CHECKING

from ._constants import (
    DEFAULT_GAP_BITS,
    DEFAULT_SELECT,
    DEFAULT_SUBSET_SIZE,
    DEFAULT_SUBSETS,
    DIGEST_BLOCKS,
)
from ._envelope import CiphertextEnvelope, bytes_to_bits, join_blocks, split_blocks
from ._exceptions import DecryptionError, FactorialRangeError, InvalidParameterError
from ._factoradic import apply_selection, to_factorial_digits
from ._knapsack import (
    MHPrivateKey,
    gen_superincreasing,
    keygen_from_sequence,
    solve_selected_multiset,
)

if TYPE_CHECKING:
    from collections.abc import Sequence
    from random import Random

    try:
        from typing import Self
    except ImportError:  # py 3.11+ required for Self
        from typing_extensions import Self

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class HwangParams:
    #: Number of subsets the key is split into.
    s: int
    #: Elements per subset.
    g: int
    #: Elements kept from each permuted subset.
    c: int
    gap_bits: int = DEFAULT_GAP_BITS

    def __post_init__(self):
        if self.s < 1:
            raise InvalidParameterError(f"Subset count must be at least 1, got {self.s}.")
        if not 1 <= self.c <= self.g:
            raise InvalidParameterError(
                f"Selection size must satisfy 1 <= c <= g, got c={self.c}, g={self.g}."
            )
        if self.gap_bits < 1:
            raise InvalidParameterError(f"'gap_bits' must be at least 1, got {self.gap_bits}.")

    @classmethod
    def full_size(cls, gap_bits: int = DEFAULT_GAP_BITS) -> Self:
        """The published dimensions: 8 subsets of 170, keeping 128 (1360-element key)."""
        return cls(s=DEFAULT_SUBSETS, g=DEFAULT_SUBSET_SIZE, c=DEFAULT_SELECT, gap_bits=gap_bits)

    @property
    def n(self) -> int:
        return self.s * self.g

    @property
    def block_len(self) -> int:
        return self.s * self.c


@dataclass(frozen=True, kw_only=True)
class HwangPrivateKey(MHPrivateKey):
    params: HwangParams

    def __post_init__(self):
        super().__post_init__()
        if len(self.b) != self.params.n:
            raise InvalidParameterError(
                f"Key has {len(self.b)} elements, parameters need {self.params.n}."
            )

    def hwang_public_key(self) -> HwangPublicKey:
        return HwangPublicKey(a=self.public_key().a, params=self.params)


@dataclass(frozen=True)
class HwangPublicKey:
    a: tuple[int, ...]
    params: HwangParams

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        if len(self.a) != self.params.n:
            raise InvalidParameterError(
                f"Key has {len(self.a)} elements, parameters need {self.params.n}."
            )


def hwang_keygen(params: HwangParams, rng: Random) -> tuple[HwangPrivateKey, HwangPublicKey]:
    key, _ = keygen_from_sequence(gen_superincreasing(params.n, params.gap_bits, rng), rng)
    priv = HwangPrivateKey(b=key.b, p=key.p, w=key.w, w_inv=key.w_inv, params=params)
    log.debug("Generated %d x %d key selecting %d per subset", params.s, params.g, params.c)
    return priv, priv.hwang_public_key()


def digest_1024(message: bytes) -> int:
    """``SHA-256(M || be32(i))`` for ``i = 0..3``, concatenated and read big-endian."""
    blocks = b"".join(
        hashlib.sha256(message + i.to_bytes(4, "big")).digest() for i in range(DIGEST_BLOCKS)
    )
    return int.from_bytes(blocks, "big")


def digest_to_dprime(message: bytes, g: int) -> int:
    if g < 1:
        raise InvalidParameterError(f"'g' must be at least 1, got {g}.")
    return digest_1024(message) % factorial(g)


def derive_working_knapsack(
    key_vector: Sequence[int], d_prime: int, params: HwangParams
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """
    Permute every subset with the digits of ``d_prime`` and keep the first ``c`` of each.

    :returns: The ``block_len`` working values and, for each, its index into ``key_vector``.
    """
    if len(key_vector) != params.n:
        raise InvalidParameterError(
            f"Key vector has {len(key_vector)} elements, parameters need {params.n}."
        )
    digits = to_factorial_digits(d_prime, params.g)
    working: list[int] = []
    positions: list[int] = []
    for start in range(0, params.n, params.g):
        selection = apply_selection(key_vector[start : start + params.g], digits, params.c)
        working.extend(selection.values)
        positions.extend(start + position for position in selection.positions)
    return tuple(working), tuple(positions)


def hwang_encrypt(pub: HwangPublicKey, message: bytes) -> CiphertextEnvelope:
    """
    Encrypt ``message``; the digest-derived selector travels in the clear with the blocks.
    """
    if not message:
        raise InvalidParameterError("Message is empty.")
    params = pub.params
    d_prime = digest_to_dprime(message, params.g)
    working, _ = derive_working_knapsack(pub.a, d_prime, params)
    bits = bytes_to_bits(message)
    blocks = tuple(
        sum(value for value, bit in zip(working, block) if bit)
        for block in split_blocks(bits, params.block_len)
    )
    return CiphertextEnvelope(blocks=blocks, msg_bit_len=len(bits), d_prime=d_prime)


def check_envelope(env: CiphertextEnvelope, params: HwangParams) -> int:
    if env.d_prime is None:
        raise InvalidParameterError("Envelope has no permutation selector.")
    if env.d_prime >= factorial(params.g):
        raise FactorialRangeError(f"Selector {env.d_prime} is outside [0, {params.g}!).")
    env.check_block_len(params.block_len)
    return env.d_prime


def hwang_decrypt(priv: HwangPrivateKey, env: CiphertextEnvelope) -> bytes:
    """
    Unmask each block with ``w_inv`` and solve it over the selected secret elements.

    :raises DecryptionError: if any block has no solution under this key.
    """
    params = priv.params
    d_prime = check_envelope(env, params)
    working, _ = derive_working_knapsack(priv.b.elements, d_prime, params)
    working_pub, _ = derive_working_knapsack(priv.public_key().a, d_prime, params)
    # Unmasked sums stay below p, so the modular reduction never wraps
    if sum(working) >= priv.p:
        raise DecryptionError("Selected secret elements reach the modulus.")
    pairs = list(zip(working, range(len(working))))
    recovered = []
    for index, c in enumerate(env.blocks):
        bits = solve_selected_multiset(pairs, c * priv.w_inv % priv.p)
        if bits is None or sum(a for a, bit in zip(working_pub, bits) if bit) != c:
            raise DecryptionError(f"Block {index} is not decryptable with this key.")
        recovered.append(bits)
    log.debug("Decrypted %d blocks of %d bits", len(recovered), params.block_len)
    return join_blocks(recovered, env.msg_bit_len)
