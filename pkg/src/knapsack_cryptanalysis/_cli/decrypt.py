# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors
"""
Decrypt a ciphertext envelope with a private key.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Annotated

import typer

from .. import HwangPrivateKey, hwang_decrypt, mh_decrypt_message
from .._constants import ExitCode, Scheme
from .._exceptions import DecryptionError, InvalidParameterError
from .._serialization import CiphertextDocument
from ._utils import _load_document, _load_private_key

log = logging.getLogger(__name__)
app = typer.Typer()


@app.command(help=__doc__)
def decrypt(
    key: Annotated[Path, typer.Option(help="Private key file.")],
    ct: Annotated[Path, typer.Option(help="Ciphertext envelope file.")],
    out: Annotated[Path, typer.Option(help="Where to write the recovered message.")],
) -> None:
    private_key = _load_private_key(key)
    ciphertext = _load_document(CiphertextDocument, ct, "--ct")
    expected = Scheme.HWANG if isinstance(private_key, HwangPrivateKey) else Scheme.MH
    if ciphertext.scheme != expected:
        raise typer.BadParameter(
            "Ciphertext and key belong to different schemes.", param_hint="--ct"
        )
    envelope = ciphertext.envelope()
    try:
        if isinstance(private_key, HwangPrivateKey):
            message = hwang_decrypt(private_key, envelope)
        else:
            message = mh_decrypt_message(private_key, envelope)
    except DecryptionError as exc:
        log.error("Decryption failed: %s", exc)
        raise typer.Exit(ExitCode.DECRYPTION_FAILURE) from exc
    except InvalidParameterError as exc:
        raise typer.BadParameter(str(exc), param_hint="--ct") from exc
    out.write_bytes(message)
    log.info("Recovered %d bytes", len(message))
