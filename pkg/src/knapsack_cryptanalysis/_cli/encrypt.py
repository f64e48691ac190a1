# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors
"""
Encrypt a message file with a public key.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Annotated

import typer

from .. import HwangPublicKey, hwang_encrypt, mh_encrypt_message
from .._serialization import CiphertextDocument
from ._utils import _load_public_key, _read_message

log = logging.getLogger(__name__)
app = typer.Typer()


@app.command(help=__doc__)
def encrypt(
    pub: Annotated[Path, typer.Option(help="Public key file.")],
    msg: Annotated[Path, typer.Option(help="File holding the message bytes.")],
    out: Annotated[Path, typer.Option(help="Where to write the ciphertext envelope.")],
) -> None:
    public_key = _load_public_key(pub)
    message = _read_message(msg)
    if isinstance(public_key, HwangPublicKey):
        envelope = hwang_encrypt(public_key, message)
    else:
        envelope = mh_encrypt_message(public_key, message)
    CiphertextDocument.from_envelope(envelope).write(out)
    log.info("Encrypted %d bytes into %d blocks", len(message), len(envelope.blocks))
