# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors

"""
Constants used throughout the codebase. All variables need to be typed as `Final`.
"""

from enum import Enum, IntEnum
from fractions import Fraction
from typing import Final

APP_NAME: Final[str] = "knapsack-cryptanalysis"
APP_AUTHOR: Final[str] = "knapsack-cryptanalysis"
APP_CONFIG_FILENAME: Final[str] = "config.toml"
CONFIG_DIR_ENV_VAR: Final[str] = "KNAPSACK_CRYPTANALYSIS_CONFIG_DIR"

#: Tag prefix of every document this package writes; the kind is appended after a slash.
FORMAT_PREFIX: Final[str] = "knapsack-cryptanalysis"
FORMAT_VERSION: Final[str] = "1.0"

DEFAULT_GAP_BITS: Final[int] = 8
DEFAULT_DELTA: Final[Fraction] = Fraction(99, 100)
DEFAULT_LATTICE_DIM: Final[int] = 5
MIN_LATTICE_DIM: Final[int] = 3
MAX_LATTICE_DIM: Final[int] = 12
DEFAULT_MAX_CANDIDATES: Final[int] = 16
DEFAULT_REFINEMENT_STEPS: Final[int] = 32

# Full-size permutation-combination dimensions, as published for the scheme.
DEFAULT_SUBSETS: Final[int] = 8
DEFAULT_SUBSET_SIZE: Final[int] = 170
DEFAULT_SELECT: Final[int] = 128

#: SHA-256 blocks concatenated into the 1024-bit message digest.
DIGEST_BLOCKS: Final[int] = 4

# Oracle guards
BRUTE_FORCE_MAX_LEN: Final[int] = 24
EXHAUSTIVE_MAX_DIM: Final[int] = 4
EXHAUSTIVE_MAX_BOUND: Final[int] = 16


class Scheme(str, Enum):
    MH = "mh"
    HWANG = "hwang"


class FileKind(str, Enum):
    PRIVATE_KEY = "private-key"
    PUBLIC_KEY = "public-key"
    CIPHERTEXT = "ciphertext"
    ATTACK_REPORT = "attack-report"
    EXPERIMENT_REPORT = "experiment-report"


class ExitCode(IntEnum):
    OK = 0
    # Same value click uses for usage errors
    PARAMETER_ERROR = 2
    DECRYPTION_FAILURE = 3
    ATTACK_FAILURE = 4
