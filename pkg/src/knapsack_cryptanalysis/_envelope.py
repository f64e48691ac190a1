# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors

"""
Message framing shared by both schemes: MSB-first bits, fixed-size blocks with a zero-padded
tail, and the envelope that travels with the ciphertext.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from ._exceptions import InvalidParameterError

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence


def bytes_to_bits(data: bytes) -> tuple[int, ...]:
    return tuple((byte >> shift) & 1 for byte in data for shift in range(7, -1, -1))


def bits_to_bytes(bits: Sequence[int]) -> bytes:
    if len(bits) % 8:
        raise InvalidParameterError(f"Bit count {len(bits)} is not a whole number of bytes.")
    out = bytearray()
    for start in range(0, len(bits), 8):
        byte = 0
        for bit in bits[start : start + 8]:
            byte = (byte << 1) | bit
        out.append(byte)
    return bytes(out)


def split_blocks(bits: Sequence[int], block_len: int) -> list[tuple[int, ...]]:
    if block_len < 1:
        raise InvalidParameterError(f"Block length must be positive, got {block_len}.")
    blocks = []
    for start in range(0, len(bits), block_len):
        block = tuple(bits[start : start + block_len])
        blocks.append(block + (0,) * (block_len - len(block)))
    return blocks


def join_blocks(blocks: Iterable[Sequence[int]], msg_bit_len: int) -> bytes:
    """Concatenate decrypted blocks, drop the padding and pack into bytes."""
    bits = [bit for block in blocks for bit in block]
    if len(bits) < msg_bit_len:
        raise InvalidParameterError(
            f"Blocks carry {len(bits)} bits, fewer than the declared {msg_bit_len}."
        )
    return bits_to_bytes(bits[:msg_bit_len])


@dataclass(frozen=True)
class CiphertextEnvelope:
    """
    Ciphertext blocks plus the framing needed to decode them.

    ``d_prime`` is the permutation selector sent in the clear by the permutation-combination
    scheme. It is ``None`` for basic Merkle-Hellman traffic.
    """

    blocks: tuple[int, ...]
    msg_bit_len: int
    d_prime: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if self.msg_bit_len < 1:
            raise InvalidParameterError("Envelope must carry a nonempty message.")
        if not self.blocks:
            raise InvalidParameterError("Envelope has no ciphertext blocks.")
        if any(block < 0 for block in self.blocks):
            raise InvalidParameterError("Ciphertext blocks must be non-negative.")
        if self.d_prime is not None and self.d_prime < 0:
            raise InvalidParameterError("'d_prime' must be non-negative.")

    def check_block_len(self, block_len: int) -> None:
        expected = -(-self.msg_bit_len // block_len)
        if len(self.blocks) != expected:
            raise InvalidParameterError(
                f"Envelope has {len(self.blocks)} blocks; {self.msg_bit_len} bits at "
                f"{block_len} bits per block need {expected}."
            )
