# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors
"""
Recover plaintext from a public key and eavesdropped ciphertext, without the private key.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import TYPE_CHECKING, Annotated

import typer
from rich import print as rprint

from .. import Config, HwangPublicKey
from .._attack import attack_hwang as _attack_hwang
from .._attack import attack_mh_message as _attack_mh_message
from .._constants import ExitCode, Scheme
from .._exceptions import InvalidParameterError
from .._serialization import AttackReportDocument, CiphertextDocument
from ._utils import _attack_config, _load_document, _load_public_key

if TYPE_CHECKING:
    from .._attack import AttackConfig, MessageRecovery

log = logging.getLogger(__name__)
app = typer.Typer()
user_config = Config.load_user_config()

PubOption = Annotated[Path, typer.Option(help="Public key file of the victim.")]
CtOption = Annotated[Path, typer.Option(help="Eavesdropped ciphertext envelope.")]
OutOption = Annotated[Path, typer.Option(help="Where to write the recovered message.")]
ReportOption = Annotated[
    Path | None,
    typer.Option(help="Where to write the attack report. Defaults to '<out>.report.toml'."),
]
LatticeDimOption = Annotated[
    int,
    typer.Option(help="Number of public elements in the first lattice."),
]
MaxLatticeDimOption = Annotated[
    int,
    typer.Option(help="Largest lattice dimension tried before giving up."),
]
DeltaOption = Annotated[str, typer.Option(help="LLL parameter as a fraction, e.g. 99/100.")]
MaxCandidatesOption = Annotated[
    int,
    typer.Option(help="Guesses read off each reduced lattice."),
]
LambdaScaleOption = Annotated[
    int,
    typer.Option(help="Scale of the first lattice coordinate."),
]


def _run(
    scheme: Scheme,
    pub: Path,
    ct: Path,
    out: Path,
    report: Path | None,
    config: AttackConfig,
) -> None:
    public_key = _load_public_key(pub)
    ciphertext = _load_document(CiphertextDocument, ct, "--ct")
    if isinstance(public_key, HwangPublicKey) != (scheme == Scheme.HWANG):
        raise typer.BadParameter(f"Public key is not a '{scheme.value}' key.", param_hint="--pub")
    if ciphertext.scheme != scheme:
        raise typer.BadParameter(f"Ciphertext is not '{scheme.value}' traffic.", param_hint="--ct")
    recovery: MessageRecovery
    try:
        if isinstance(public_key, HwangPublicKey):
            recovery = _attack_hwang(public_key, ciphertext.envelope(), config)
        else:
            recovery = _attack_mh_message(public_key, ciphertext.envelope(), config)
    except InvalidParameterError as exc:
        raise typer.BadParameter(str(exc)) from exc
    report_path = report or out.with_name(f"{out.name}.report.toml")
    AttackReportDocument.from_report(recovery.report).write(report_path)
    summary = recovery.report
    rprint(
        f"Lattice dimensions {list(summary.dims_tried)}, {summary.candidates_tried} candidates, "
        f"{summary.blocks_verified}/{summary.blocks_total} blocks verified"
    )
    if recovery.message is None:
        log.error("Attack failed; report written to %s", report_path)
        raise typer.Exit(ExitCode.ATTACK_FAILURE)
    out.write_bytes(recovery.message)
    log.info("Recovered %d bytes into %s", len(recovery.message), out)


@app.command(help="Break basic Merkle-Hellman traffic. " + __doc__)
def attack_mh(
    pub: PubOption,
    ct: CtOption,
    out: OutOption,
    report: ReportOption = None,
    lattice_dim: LatticeDimOption = user_config.lattice_dim,
    max_lattice_dim: MaxLatticeDimOption = user_config.max_lattice_dim,
    delta: DeltaOption = user_config.delta,
    max_candidates: MaxCandidatesOption = user_config.max_candidates,
    lambda_scale: LambdaScaleOption = 1,
) -> None:
    config = _attack_config(lattice_dim, max_lattice_dim, delta, max_candidates, lambda_scale)
    _run(Scheme.MH, pub, ct, out, report, config)


@app.command(help="Break permutation-combination traffic. " + __doc__)
def attack_hwang(
    pub: PubOption,
    ct: CtOption,
    out: OutOption,
    report: ReportOption = None,
    lattice_dim: LatticeDimOption = user_config.lattice_dim,
    max_lattice_dim: MaxLatticeDimOption = user_config.max_lattice_dim,
    delta: DeltaOption = user_config.delta,
    max_candidates: MaxCandidatesOption = user_config.max_candidates,
    lambda_scale: LambdaScaleOption = 1,
) -> None:
    config = _attack_config(lattice_dim, max_lattice_dim, delta, max_candidates, lambda_scale)
    _run(Scheme.HWANG, pub, ct, out, report, config)
