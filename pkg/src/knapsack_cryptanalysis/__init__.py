# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors
"""
knapsack-cryptanalysis - Trapdoor knapsack cryptosystems and the lattice attack that breaks them
"""

from ._attack import (  # noqa
    AttackConfig,
    AttackReport,
    BlockRecovery,
    MessageRecovery,
    RecoveredKey,
    attack_hwang,
    attack_mh,
    attack_mh_message,
    build_sda_lattice,
    extract_candidates,
    recover_key,
)
from ._config import Config  # noqa
from ._envelope import CiphertextEnvelope  # noqa
from ._factoradic import (  # noqa
    FactorialDigits,
    SelectionMap,
    apply_selection,
    decode_permutation,
    from_factorial_digits,
    to_factorial_digits,
)
from ._hwang import (  # noqa
    HwangParams,
    HwangPrivateKey,
    HwangPublicKey,
    derive_working_knapsack,
    digest_1024,
    digest_to_dprime,
    hwang_decrypt,
    hwang_encrypt,
    hwang_keygen,
)
from ._knapsack import (  # noqa
    MHPrivateKey,
    PublicKnapsack,
    SuperincreasingSequence,
    brute_force_subset_sum,
    decrypt_mh,
    encrypt_mh,
    gen_superincreasing,
    mh_decrypt_message,
    mh_encrypt_message,
    mh_keygen,
    solve_selected_multiset,
    solve_superincreasing,
)
from ._lattice import (  # noqa
    IntegerBasis,
    ReductionResult,
    gram_schmidt,
    lll_reduce,
    shortest_vector_exhaustive,
)
from ._rng import CounterRandom, derive_seed  # noqa
from ._version import __version__

__all__ = [
    "__version__",
    "AttackConfig",
    "AttackReport",
    "BlockRecovery",
    "CiphertextEnvelope",
    "Config",
    "CounterRandom",
    "FactorialDigits",
    "HwangParams",
    "HwangPrivateKey",
    "HwangPublicKey",
    "IntegerBasis",
    "MHPrivateKey",
    "MessageRecovery",
    "PublicKnapsack",
    "RecoveredKey",
    "ReductionResult",
    "SelectionMap",
    "SuperincreasingSequence",
    "apply_selection",
    "attack_hwang",
    "attack_mh",
    "attack_mh_message",
    "brute_force_subset_sum",
    "build_sda_lattice",
    "decode_permutation",
    "decrypt_mh",
    "derive_seed",
    "derive_working_knapsack",
    "digest_1024",
    "digest_to_dprime",
    "encrypt_mh",
    "extract_candidates",
    "from_factorial_digits",
    "gen_superincreasing",
    "gram_schmidt",
    "hwang_decrypt",
    "hwang_encrypt",
    "hwang_keygen",
    "lll_reduce",
    "mh_decrypt_message",
    "mh_encrypt_message",
    "mh_keygen",
    "recover_key",
    "shortest_vector_exhaustive",
    "solve_selected_multiset",
    "solve_superincreasing",
    "to_factorial_digits",
]


def __dir__() -> list[str]:
    return __all__
