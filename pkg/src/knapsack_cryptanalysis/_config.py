# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors

"""
User configuration utilities.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import TYPE_CHECKING

try:
    import tomllib
except ImportError:
    import tomli as tomllib

if TYPE_CHECKING:
    try:
        from typing import Self
    except ImportError:  # py 3.11+ required for Self
        from typing_extensions import Self

from platformdirs import user_config_dir

from ._constants import (
    APP_AUTHOR,
    APP_CONFIG_FILENAME,
    APP_NAME,
    CONFIG_DIR_ENV_VAR,
    DEFAULT_DELTA,
    DEFAULT_GAP_BITS,
    DEFAULT_LATTICE_DIM,
    DEFAULT_MAX_CANDIDATES,
    MAX_LATTICE_DIM,
    MIN_LATTICE_DIM,
)


def _get_config_directory() -> Path:
    if config_dir := os.environ.get(CONFIG_DIR_ENV_VAR):
        return Path(config_dir)
    return Path(user_config_dir(appname=APP_NAME, appauthor=APP_AUTHOR))


def _get_config_file() -> Path:
    return _get_config_directory() / APP_CONFIG_FILENAME


def _positive_int(name: str, value: object, minimum: int = 1) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise ValueError(f"'{name}' must be an integer >= {minimum}, but found {value!r}.")


@dataclass(kw_only=True)
class Config:
    """
    User defaults for the `knapsack-cryptanalysis` CLI.
    """

    #: LLL parameter as a fraction string, e.g. "3/4".
    delta: str = f"{DEFAULT_DELTA.numerator}/{DEFAULT_DELTA.denominator}"
    #: First lattice dimension tried by the attacks.
    lattice_dim: int = DEFAULT_LATTICE_DIM
    #: Largest lattice dimension tried before an attack gives up.
    max_lattice_dim: int = MAX_LATTICE_DIM
    max_candidates: int = DEFAULT_MAX_CANDIDATES
    gap_bits: int = DEFAULT_GAP_BITS
    #: Worker processes used by `experiment`.
    jobs: int = 1

    def __post_init__(self):
        if not isinstance(self.delta, str):
            raise ValueError(f"'delta' must be a fraction string, but found {self.delta!r}.")
        try:
            delta = Fraction(self.delta)
        except ValueError as exc:
            raise ValueError(f"'delta' is not a fraction: {self.delta!r}.") from exc
        if not Fraction(1, 4) < delta < 1:
            raise ValueError(f"'delta' must lie in (1/4, 1), but found {self.delta}.")
        _positive_int("lattice_dim", self.lattice_dim, MIN_LATTICE_DIM)
        _positive_int("max_lattice_dim", self.max_lattice_dim, MIN_LATTICE_DIM)
        if self.max_lattice_dim < self.lattice_dim:
            raise ValueError("'max_lattice_dim' must not be smaller than 'lattice_dim'.")
        _positive_int("max_candidates", self.max_candidates)
        _positive_int("gap_bits", self.gap_bits)
        _positive_int("jobs", self.jobs)

    @property
    def delta_fraction(self) -> Fraction:
        return Fraction(self.delta)

    @classmethod
    def load_user_config(cls) -> Self:
        config_file = _get_config_file()
        if config_file.is_file():
            try:
                return cls(**tomllib.loads(config_file.read_text()))
            except (TypeError, ValueError) as exc:
                raise ValueError(f"Config file '{config_file}' has errors: {exc}") from exc
        return cls()
