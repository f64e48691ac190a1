# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors

"""
Deterministic random stream shared by key generation and the experiment runner.

The generator is named ``ctr-sha256`` and is fully specified so that other implementations
can reproduce key material from a seed:

- The byte stream is ``SHA-256(seed_be64 || counter_be64)`` for ``counter = 0, 1, 2, ...``,
  consumed left to right.
- ``getrandbits(k)`` reads ``ceil(k / 8)`` bytes as a big-endian integer and shifts out the
  surplus low bits.
- ``randint(lo, hi)`` is ``lo + below(hi - lo + 1)``, where ``below(n)`` repeats
  ``getrandbits(n.bit_length())`` until the value is smaller than ``n``.
- ``randbytes(n)`` is the next ``n`` bytes of the stream.
"""

from __future__ import annotations

import hashlib
import random
from typing import Any

from ._exceptions import InvalidParameterError

GENERATOR_NAME = "ctr-sha256"
_SEED_LIMIT = 1 << 64


def _check_seed(seed: object) -> int:
    if isinstance(seed, bool) or not isinstance(seed, int) or not 0 <= seed < _SEED_LIMIT:
        raise InvalidParameterError(f"Seed must be an integer in [0, 2**64), got {seed!r}.")
    return seed


class CounterRandom(random.Random):
    """
    ``random.Random`` driven by SHA-256 in counter mode. Seeded with a 64-bit integer.
    """

    def __init__(self, seed: int = 0) -> None:
        super().__init__(seed)

    def seed(self, a: Any = 0, version: int = 2) -> None:
        self._seed_bytes = _check_seed(a).to_bytes(8, "big")
        self._counter = 0
        self._buffer = b""

    def _read(self, nbytes: int) -> bytes:
        while len(self._buffer) < nbytes:
            block = hashlib.sha256(self._seed_bytes + self._counter.to_bytes(8, "big"))
            self._buffer += block.digest()
            self._counter += 1
        out, self._buffer = self._buffer[:nbytes], self._buffer[nbytes:]
        return out

    def getrandbits(self, k: int) -> int:
        if k < 0:
            raise ValueError("number of bits must be non-negative")
        if k == 0:
            return 0
        nbytes = (k + 7) // 8
        return int.from_bytes(self._read(nbytes), "big") >> (nbytes * 8 - k)

    def below(self, n: int) -> int:
        if n <= 0:
            raise InvalidParameterError(f"Upper bound must be positive, got {n}.")
        k = n.bit_length()
        r = self.getrandbits(k)
        while r >= n:
            r = self.getrandbits(k)
        return r

    def randint(self, a: int, b: int) -> int:
        if b < a:
            raise InvalidParameterError(f"Empty range [{a}, {b}].")
        return a + self.below(b - a + 1)

    def randbytes(self, n: int) -> bytes:
        return self._read(n)

    def random(self) -> float:
        return self.getrandbits(53) * 2.0**-53

    def getstate(self) -> tuple[bytes, int, bytes]:
        return (self._seed_bytes, self._counter, self._buffer)

    def setstate(self, state: tuple[bytes, int, bytes]) -> None:
        self._seed_bytes, self._counter, self._buffer = state


def derive_seed(master: int, *labels: object) -> int:
    """
    Derive an independent 64-bit seed from a master seed and a path of labels.

    :param master: The master seed, in ``[0, 2**64)``.
    :param labels: Anything with a stable ``str()``, e.g. scheme name, grid values, trial index.
    :returns: First eight bytes of ``SHA-256("master:label1:label2...")``, big-endian.
    """
    text = ":".join(str(part) for part in (_check_seed(master), *labels))
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")
