# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors
"""
Exception subclasses for this package.
"""

try:
    ExceptionGroup
except NameError:
    from exceptiongroup import ExceptionGroup


class InvalidParameterError(ValueError):
    pass


class NotSuperincreasingError(InvalidParameterError):
    pass


class FactorialRangeError(InvalidParameterError):
    pass


class OracleGuardError(InvalidParameterError):
    """Raised when a brute-force test oracle is asked for more than it can enumerate."""


class RankDeficiencyError(ValueError):
    pass


class DecryptionError(ValueError):
    """A ciphertext block has no solution under the given key."""


class FormatError(ValueError):
    pass


class ValidationErrors(ExceptionGroup):
    pass
