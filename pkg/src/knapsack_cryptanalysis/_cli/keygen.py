# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors
"""
Generate a key pair and write it as `<out>.key.toml` and `<out>.pub.toml`.
"""

from __future__ import annotations

import logging
import secrets
from pathlib import Path
from typing import Annotated

import typer
from rich import print as rprint

from .. import Config, CounterRandom, HwangParams, hwang_keygen, mh_keygen
from .._constants import DEFAULT_SELECT, DEFAULT_SUBSET_SIZE, DEFAULT_SUBSETS, Scheme
from .._exceptions import InvalidParameterError
from .._serialization import PrivateKeyDocument

log = logging.getLogger(__name__)
app = typer.Typer()
user_config = Config.load_user_config()


def key_paths(out: Path) -> tuple[Path, Path]:
    return out.with_name(f"{out.name}.key.toml"), out.with_name(f"{out.name}.pub.toml")


@app.command(help=__doc__)
def keygen(
    out: Annotated[
        Path,
        typer.Option(help="Path prefix for the private and public key files."),
    ],
    scheme: Annotated[
        Scheme,
        typer.Option(help="Basic Merkle-Hellman or permutation-combination key."),
    ] = Scheme.MH,
    n: Annotated[
        int,
        typer.Option(help="Number of knapsack elements of a basic key."),
    ] = 16,
    subsets: Annotated[
        int,
        typer.Option(help="Subsets of a permutation-combination key."),
    ] = DEFAULT_SUBSETS,
    subset_size: Annotated[
        int,
        typer.Option(help="Elements per subset."),
    ] = DEFAULT_SUBSET_SIZE,
    select: Annotated[
        int,
        typer.Option(help="Elements kept from each permuted subset."),
    ] = DEFAULT_SELECT,
    gap_bits: Annotated[
        int,
        typer.Option(help="Bit size of the random gap above each running sum."),
    ] = user_config.gap_bits,
    seed: Annotated[
        int | None,
        typer.Option(help="64-bit seed. Omit it to draw one from the OS."),
    ] = None,
) -> None:
    if seed is None:
        seed = secrets.randbits(64)
        log.info("Using seed %d", seed)
    try:
        rng = CounterRandom(seed)
        if scheme == Scheme.HWANG:
            params = HwangParams(s=subsets, g=subset_size, c=select, gap_bits=gap_bits)
            priv, _ = hwang_keygen(params, rng)
            document = PrivateKeyDocument.from_key(priv)
        else:
            priv, _ = mh_keygen(n, gap_bits, rng)
            document = PrivateKeyDocument.from_key(priv, gap_bits=gap_bits)
    except InvalidParameterError as exc:
        raise typer.BadParameter(str(exc)) from exc
    key_path, pub_path = key_paths(out)
    document.write(key_path)
    public = document.public_document()
    public.write(pub_path)
    log.info("Wrote %s and %s", key_path, pub_path)
    rprint(f"[bold]Fingerprint:[/] {public.fingerprint()}")
