# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors

from __future__ import annotations

import logging
from fractions import Fraction
from pathlib import Path
from typing import TYPE_CHECKING

import typer

from .._attack import AttackConfig
from .._exceptions import FormatError, InvalidParameterError, ValidationErrors
from .._serialization import PrivateKeyDocument, PublicKeyDocument

if TYPE_CHECKING:
    from typing import TypeVar

    from .._serialization import AnyPrivateKey, AnyPublicKey, Document

    _DocumentType = TypeVar("_DocumentType", bound=Document)

log = logging.getLogger(__name__)


def _load_document(cls: type[_DocumentType], path: Path, param: str) -> _DocumentType:
    try:
        return cls.from_path(path)
    except FileNotFoundError as exc:
        raise typer.BadParameter(f"File '{path}' does not exist.", param_hint=param) from exc
    except ValidationErrors as exc:
        for error in exc.exceptions:
            log.error("%s: %s", "/".join(map(str, error.absolute_path)) or "<root>", error.message)
        raise typer.BadParameter(f"'{path}' does not match its schema.", param_hint=param) from exc
    except (FormatError, InvalidParameterError) as exc:
        raise typer.BadParameter(str(exc), param_hint=param) from exc


def _load_public_key(path: Path, param: str = "--pub") -> AnyPublicKey:
    document = _load_document(PublicKeyDocument, path, param)
    try:
        return document.public_key()
    except (FormatError, InvalidParameterError) as exc:
        raise typer.BadParameter(str(exc), param_hint=param) from exc


def _load_private_key(path: Path, param: str = "--key") -> AnyPrivateKey:
    document = _load_document(PrivateKeyDocument, path, param)
    try:
        return document.private_key()
    except (FormatError, InvalidParameterError) as exc:
        raise typer.BadParameter(str(exc), param_hint=param) from exc


def _parse_delta(value: str) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise typer.BadParameter(f"'{value}' is not a fraction like 99/100.") from exc


def _attack_config(
    lattice_dim: int,
    max_lattice_dim: int,
    delta: str,
    max_candidates: int,
    lambda_scale: int,
) -> AttackConfig:
    try:
        return AttackConfig(
            t=lattice_dim,
            max_t=max(lattice_dim, max_lattice_dim),
            delta=_parse_delta(delta),
            max_candidates=max_candidates,
            lambda_scale=lambda_scale,
        )
    except InvalidParameterError as exc:
        raise typer.BadParameter(str(exc)) from exc


def _read_message(path: Path) -> bytes:
    try:
        message = path.read_bytes()
    except FileNotFoundError as exc:
        raise typer.BadParameter(f"File '{path}' does not exist.", param_hint="--msg") from exc
    if not message:
        raise typer.BadParameter("Message is empty.", param_hint="--msg")
    return message
