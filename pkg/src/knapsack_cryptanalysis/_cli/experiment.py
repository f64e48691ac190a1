# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors
"""
Measure attack success rates over a grid of parameters with seeded trials.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Annotated

import typer
from rich.console import Console
from rich.table import Table

from .. import Config
from .._constants import DEFAULT_SUBSETS, Scheme
from .._exceptions import InvalidParameterError
from .._experiment import build_grid, experiment_document, run_experiment
from ._utils import _parse_delta

log = logging.getLogger(__name__)
app = typer.Typer()
user_config = Config.load_user_config()


@app.command(help=__doc__)
def experiment(
    out: Annotated[Path, typer.Option(help="Where to write the experiment report.")],
    scheme: Annotated[Scheme, typer.Option(help="Scheme to attack.")] = Scheme.MH,
    n: Annotated[
        list[int] | None,
        typer.Option(help="Basic key sizes (default 8, 16, 24). Repeat to sweep several."),
    ] = None,
    gap_bits: Annotated[
        list[int] | None,
        typer.Option(help="Gap bit sizes. Repeat to sweep several."),
    ] = None,
    lattice_dim: Annotated[
        list[int] | None,
        typer.Option(help="First lattice dimensions. Repeat to sweep several."),
    ] = None,
    delta: Annotated[
        list[str] | None,
        typer.Option(help="LLL parameters like 99/100. Repeat to sweep several."),
    ] = None,
    subsets: Annotated[
        int,
        typer.Option(help="Subsets of permutation-combination keys."),
    ] = DEFAULT_SUBSETS,
    subset_size: Annotated[
        list[int] | None,
        typer.Option(help="Elements per subset (default 5). Repeat to sweep several."),
    ] = None,
    select: Annotated[
        int,
        typer.Option(help="Elements kept from each permuted subset."),
    ] = 3,
    trials: Annotated[int, typer.Option(help="Trials per grid point.")] = 10,
    seed: Annotated[int, typer.Option(help="Master seed of every trial.")] = 0,
    jobs: Annotated[
        int,
        typer.Option(help="Worker processes. Results do not depend on it."),
    ] = user_config.jobs,
    max_lattice_dim: Annotated[
        int,
        typer.Option(help="Largest lattice dimension tried before a trial fails."),
    ] = user_config.max_lattice_dim,
    max_candidates: Annotated[
        int,
        typer.Option(help="Guesses read off each reduced lattice."),
    ] = user_config.max_candidates,
    timings: Annotated[
        bool,
        typer.Option(help="Record mean wall time. Disable for reproducible reports."),
    ] = True,
) -> None:
    try:
        points = build_grid(
            scheme,
            ns=n or [8, 16, 24],
            gap_bits=gap_bits or [user_config.gap_bits],
            lattice_dims=lattice_dim or [user_config.lattice_dim],
            deltas=[_parse_delta(value) for value in delta or [user_config.delta]],
            subsets=subsets,
            subset_sizes=subset_size or [5],
            select=select,
        )
        summaries = run_experiment(
            points,
            trials,
            seed,
            jobs=jobs,
            max_lattice_dim=max_lattice_dim,
            max_candidates=max_candidates,
        )
    except InvalidParameterError as exc:
        raise typer.BadParameter(str(exc)) from exc
    experiment_document(summaries, trials, seed, timings=timings).write(out)

    table = Table("point", "successes", "keys", "rate")
    for summary in summaries:
        point = summary.point
        label = f"n={point.n} gap={point.gap_bits} t={point.lattice_dim} delta={point.delta}"
        if point.hwang is not None:
            label = f"s={point.hwang.s} g={point.hwang.g} c={point.hwang.c} " + label
        table.add_row(
            label,
            str(summary.successes),
            str(summary.key_recoveries),
            summary.success_rate,
        )
    Console().print(table)
    log.info("Wrote report to %s", out)
