# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors

"""
Seeded attack experiments over a grid of parameters.

Every trial derives its own seed from the master seed, the scheme, the instance shape and the
trial index, so a trial's key and plaintext do not depend on the lattice settings being
compared, on the worker that runs it, or on the order trials finish in.
"""

from __future__ import annotations

import concurrent.futures
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import TYPE_CHECKING

from ._attack import AttackConfig, attack_hwang, attack_mh
from ._constants import DEFAULT_MAX_CANDIDATES, MAX_LATTICE_DIM, Scheme
from ._exceptions import InvalidParameterError
from ._hwang import HwangParams, hwang_encrypt, hwang_keygen
from ._knapsack import encrypt_mh, mh_keygen
from ._rng import GENERATOR_NAME, CounterRandom, derive_seed
from ._serialization import ExperimentReportDocument, fraction_str
from ._version import __version__

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence
    from typing import Any

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridPoint:
    scheme: Scheme
    n: int
    gap_bits: int
    lattice_dim: int
    delta: Fraction
    #: Permutation-combination shape; None for the basic scheme.
    hwang: HwangParams | None = None

    def __post_init__(self):
        if (self.scheme == Scheme.HWANG) != (self.hwang is not None):
            raise InvalidParameterError("Permutation-combination points need their shape.")
        if self.lattice_dim > self.n:
            raise InvalidParameterError(
                f"Lattice dimension {self.lattice_dim} exceeds the key size {self.n}."
            )

    def instance_labels(self) -> tuple[object, ...]:
        if self.hwang is not None:
            return (self.scheme.value, self.hwang.s, self.hwang.g, self.hwang.c, self.gap_bits)
        return (self.scheme.value, self.n, self.gap_bits)

    def to_table(self) -> dict[str, Any]:
        table: dict[str, Any] = {"scheme": self.scheme.value, "n": self.n}
        if self.hwang is not None:
            table |= {
                "subsets": self.hwang.s,
                "subset_size": self.hwang.g,
                "select": self.hwang.c,
            }
        table |= {
            "gap_bits": self.gap_bits,
            "lattice_dim": self.lattice_dim,
            "delta": fraction_str(self.delta),
        }
        return table


@dataclass(frozen=True)
class TrialOutcome:
    succeeded: bool
    key_recovered: bool
    #: A verified plaintext that differs from the one sent. Must never happen.
    wrong_plaintext: bool
    seconds: float


@dataclass(frozen=True)
class PointSummary:
    point: GridPoint
    outcomes: tuple[TrialOutcome, ...]

    @property
    def trials(self) -> int:
        return len(self.outcomes)

    @property
    def successes(self) -> int:
        return sum(outcome.succeeded for outcome in self.outcomes)

    @property
    def key_recoveries(self) -> int:
        return sum(outcome.key_recovered for outcome in self.outcomes)

    @property
    def wrong_plaintexts(self) -> int:
        return sum(outcome.wrong_plaintext for outcome in self.outcomes)

    @property
    def success_rate(self) -> str:
        return f"{self.successes}/{self.trials}"

    @property
    def mean_seconds(self) -> float:
        return sum(outcome.seconds for outcome in self.outcomes) / self.trials


def build_grid(
    scheme: Scheme,
    *,
    ns: Iterable[int] = (),
    gap_bits: Iterable[int],
    lattice_dims: Iterable[int],
    deltas: Iterable[Fraction | str],
    subsets: int | None = None,
    subset_sizes: Iterable[int] = (),
    select: int | None = None,
) -> list[GridPoint]:
    """
    Cartesian product of the given values, in the order given.

    The basic scheme varies ``ns``; the permutation-combination scheme varies ``subset_sizes``
    with ``subsets`` and ``select`` fixed.
    """
    points = []
    if scheme == Scheme.HWANG:
        if subsets is None or select is None:
            raise InvalidParameterError("Permutation-combination grids need subsets and select.")
        for g, bits, t, delta in product(subset_sizes, gap_bits, lattice_dims, deltas):
            shape = HwangParams(s=subsets, g=g, c=select, gap_bits=bits)
            points.append(GridPoint(scheme, shape.n, bits, t, Fraction(delta), hwang=shape))
    else:
        for n, bits, t, delta in product(ns, gap_bits, lattice_dims, deltas):
            points.append(GridPoint(scheme, n, bits, t, Fraction(delta)))
    if not points:
        raise InvalidParameterError("The parameter grid is empty.")
    return points


def run_trial(
    point: GridPoint,
    master_seed: int,
    trial: int,
    max_lattice_dim: int = MAX_LATTICE_DIM,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> TrialOutcome:
    """Generate one instance, encrypt a random plaintext and attack it from public data."""
    rng = CounterRandom(derive_seed(master_seed, *point.instance_labels(), trial))
    config = AttackConfig(
        t=point.lattice_dim,
        delta=point.delta,
        max_t=max(max_lattice_dim, point.lattice_dim),
        max_candidates=max_candidates,
    )
    if point.hwang is not None:
        _, hwang_pub = hwang_keygen(point.hwang, rng)
        message = rng.randbytes(max(1, point.hwang.block_len // 8))
        recovery = attack_hwang(hwang_pub, hwang_encrypt(hwang_pub, message), config)
        report = recovery.report
        wrong = recovery.message is not None and recovery.message != message
    else:
        _, pub = mh_keygen(point.n, point.gap_bits, rng)
        bits = tuple(rng.getrandbits(1) for _ in range(point.n))
        blocks = attack_mh(pub.a, [encrypt_mh(pub, bits)], config)
        report = blocks.report
        wrong = blocks.plaintexts[0] is not None and blocks.plaintexts[0] != bits
    if wrong:
        log.error("Verified plaintext differs from the original in trial %d of %s", trial, point)
    return TrialOutcome(
        succeeded=report.succeeded and not wrong,
        key_recovered=report.key_recovered,
        wrong_plaintext=wrong,
        seconds=report.elapsed_seconds,
    )


def run_experiment(
    points: Sequence[GridPoint],
    trials: int,
    master_seed: int,
    *,
    jobs: int = 1,
    max_lattice_dim: int = MAX_LATTICE_DIM,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> list[PointSummary]:
    """
    Run ``trials`` seeded trials at every grid point.

    :param jobs: Worker processes. Results are identical for any value.
    """
    if trials < 1:
        raise InvalidParameterError(f"Need at least one trial, got {trials}.")
    if jobs < 1:
        raise InvalidParameterError(f"Need at least one worker, got {jobs}.")
    tasks = [(index, trial) for index in range(len(points)) for trial in range(trials)]
    outcomes: dict[tuple[int, int], TrialOutcome] = {}
    extra = (max_lattice_dim, max_candidates)
    if jobs == 1:
        for index, trial in tasks:
            outcomes[index, trial] = run_trial(points[index], master_seed, trial, *extra)
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
            futures = {
                executor.submit(run_trial, points[index], master_seed, trial, *extra): (
                    index,
                    trial,
                )
                for index, trial in tasks
            }
            for fut in concurrent.futures.as_completed(futures):
                outcomes[futures[fut]] = fut.result()
    summaries = []
    for index, point in enumerate(points):
        summary = PointSummary(point, tuple(outcomes[index, t] for t in range(trials)))
        log.info("%s: %s attacks succeeded", point.to_table(), summary.success_rate)
        summaries.append(summary)
    return summaries


def experiment_document(
    summaries: Sequence[PointSummary], trials: int, master_seed: int, timings: bool = True
) -> ExperimentReportDocument:
    """Report document; without timings it is bit-for-bit reproducible from the seed."""
    points = []
    for summary in summaries:
        table = summary.point.to_table() | {
            "trials": summary.trials,
            "successes": summary.successes,
            "key_recoveries": summary.key_recoveries,
            "wrong_plaintexts": summary.wrong_plaintexts,
            "success_rate": summary.success_rate,
        }
        if timings:
            table["mean_seconds"] = round(summary.mean_seconds, 6)
        points.append(table)
    return ExperimentReportDocument.new(
        generator=GENERATOR_NAME,
        artifact_version=__version__,
        master_seed=str(master_seed),
        trials=trials,
        points=points,
    )
