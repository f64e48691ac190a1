# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors

import hashlib

import pytest
from hypothesis import given
from hypothesis import strategies as st

from knapsack_cryptanalysis import CounterRandom, derive_seed
from knapsack_cryptanalysis._exceptions import InvalidParameterError


def test_stream_is_sha256_in_counter_mode():
    rng = CounterRandom(7)
    seed = (7).to_bytes(8, "big")
    expected = b"".join(
        hashlib.sha256(seed + counter.to_bytes(8, "big")).digest() for counter in range(3)
    )
    assert rng.randbytes(40) + rng.randbytes(56) == expected[:96]


def test_getrandbits_takes_high_bits():
    first_byte = hashlib.sha256((3).to_bytes(8, "big") + bytes(8)).digest()[0]
    assert CounterRandom(3).getrandbits(5) == first_byte >> 3
    assert CounterRandom(3).getrandbits(0) == 0


def test_same_seed_same_stream():
    assert CounterRandom(99).randbytes(100) == CounterRandom(99).randbytes(100)
    assert CounterRandom(99).randbytes(32) != CounterRandom(100).randbytes(32)


@given(seed=st.integers(0, 2**64 - 1), lo=st.integers(-1000, 1000), span=st.integers(0, 2**70))
def test_randint_bounds(seed, lo, span):
    value = CounterRandom(seed).randint(lo, lo + span)
    assert lo <= value <= lo + span


def test_state_round_trip():
    rng = CounterRandom(5)
    rng.randbytes(13)
    state = rng.getstate()
    ahead = rng.randbytes(50)
    rng.setstate(state)
    assert rng.randbytes(50) == ahead


@pytest.mark.parametrize("seed", [-1, 2**64, 1.5, True, "1"])
def test_bad_seed(seed):
    with pytest.raises(InvalidParameterError):
        CounterRandom(seed)


def test_empty_range():
    with pytest.raises(InvalidParameterError):
        CounterRandom(1).randint(5, 4)


def test_derive_seed():
    text = "42:mh:8:8:3"
    expected = int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")
    assert derive_seed(42, "mh", 8, 8, 3) == expected
    assert derive_seed(42, "mh", 8, 8, 3) != derive_seed(42, "mh", 8, 8, 4)
    assert 0 <= derive_seed(2**64 - 1, "x") < 2**64
