# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors
"""
Generate, use and break Merkle-Hellman and permutation-combination knapsack keys.
"""

import logging

import typer
from rich.console import Console
from rich.logging import RichHandler

from .attack import app as _attack
from .decrypt import app as _decrypt
from .encrypt import app as _encrypt
from .experiment import app as _experiment
from .keygen import app as _keygen

app = typer.Typer(
    help=__doc__,
    no_args_is_help=True,
    add_completion=False,
)
app.add_typer(_keygen)
app.add_typer(_encrypt)
app.add_typer(_decrypt)
app.add_typer(_attack)
app.add_typer(_experiment)

logging.basicConfig(
    level=logging.INFO,
    format="%(message)s",
    datefmt="[%X]",
    handlers=[RichHandler(console=Console(stderr=True))],
)

if __name__ == "__main__":
    app()
