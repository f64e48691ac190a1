# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors

"""
Equivalent-key recovery for trapdoor knapsacks, and decryption of eavesdropped traffic.

With the true trapdoor ``a[i] * U - k[i] * p = b[i]``, the ratios ``k[i] / k[0]`` approximate
``a[i] / a[0]`` simultaneously and very closely. A small lattice built from the first ``t``
public elements has that approximation as one of its shortest vectors, so LLL hands us
candidates for ``k[0]``. Each candidate places ``U' / P'`` next to ``k[0] / a[0]``; from
there we look for a nearby rational under which every public element maps to a
superincreasing residue whose total stays below ``P'``. Such a pair decrypts exactly like the
designer's key.

Failures are data: every public function returns a result object with a report and never
raises for an instance that simply resists the attack.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING

from ._constants import (
    DEFAULT_DELTA,
    DEFAULT_LATTICE_DIM,
    DEFAULT_MAX_CANDIDATES,
    DEFAULT_REFINEMENT_STEPS,
    MAX_LATTICE_DIM,
    MIN_LATTICE_DIM,
    Scheme,
)
from ._envelope import join_blocks
from ._exceptions import InvalidParameterError
from ._hwang import check_envelope, derive_working_knapsack
from ._knapsack import count_superincreasing_prefix, is_superincreasing, solve_selected_multiset
from ._lattice import IntegerBasis, ReductionResult, check_delta, lll_reduce

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from ._envelope import CiphertextEnvelope
    from ._hwang import HwangPublicKey
    from ._knapsack import BitVector, MHPrivateKey, PublicKnapsack

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class AttackConfig:
    #: Public elements used in the first lattice; also its dimension.
    t: int = DEFAULT_LATTICE_DIM
    #: Scale of the first lattice coordinate.
    lambda_scale: int = 1
    #: Distinct ``k[0]`` guesses tried per lattice.
    max_candidates: int = DEFAULT_MAX_CANDIDATES
    delta: Fraction = DEFAULT_DELTA
    #: Largest lattice dimension tried when smaller ones yield nothing.
    max_t: int = MAX_LATTICE_DIM
    #: Cells visited while searching near one candidate.
    max_refinement_steps: int = DEFAULT_REFINEMENT_STEPS

    def __post_init__(self):
        object.__setattr__(self, "delta", check_delta(self.delta))
        if self.t < MIN_LATTICE_DIM:
            raise InvalidParameterError(
                f"Lattice dimension must be at least {MIN_LATTICE_DIM}, got {self.t}."
            )
        if self.max_t < self.t:
            raise InvalidParameterError(
                f"Largest lattice dimension ({self.max_t}) is below the first one ({self.t})."
            )
        if self.lambda_scale < 1:
            raise InvalidParameterError(
                f"'lambda_scale' must be at least 1, got {self.lambda_scale}."
            )
        if self.max_candidates < 1:
            raise InvalidParameterError(
                f"'max_candidates' must be at least 1, got {self.max_candidates}."
            )
        if self.max_refinement_steps < 0:
            raise InvalidParameterError("'max_refinement_steps' must be non-negative.")


@dataclass(frozen=True)
class RecoveredKey:
    """A modulus/multiplier pair derived from public data alone."""

    u_prime: int
    p_prime: int
    b_prime: tuple[int, ...]
    superincreasing_when_sorted: bool
    #: Lattice candidate this key was derived from.
    k1: int = 0

    def __post_init__(self):
        object.__setattr__(self, "b_prime", tuple(self.b_prime))
        if not 1 <= self.u_prime < self.p_prime:
            raise InvalidParameterError(
                f"Recovered multiplier {self.u_prime} is outside [1, {self.p_prime})."
            )

    @classmethod
    def from_pair(cls, a: Sequence[int], u_prime: int, p_prime: int, k1: int = 0) -> RecoveredKey:
        b_prime = tuple(value * u_prime % p_prime for value in a)
        return cls(
            u_prime=u_prime,
            p_prime=p_prime,
            b_prime=b_prime,
            superincreasing_when_sorted=is_decrypting_key(b_prime, p_prime),
            k1=k1,
        )

    def unmask(self, c: int) -> int:
        return c * self.u_prime % self.p_prime


@dataclass(frozen=True)
class AttackReport:
    scheme: Scheme
    n: int
    dims_tried: tuple[int, ...]
    delta: Fraction
    lambda_scale: int
    candidates_tried: int
    key: RecoveredKey | None
    blocks_total: int = 0
    blocks_verified: int = 0
    elapsed_seconds: float = field(default=0.0, compare=False)

    @property
    def key_recovered(self) -> bool:
        return self.key is not None and self.key.superincreasing_when_sorted

    @property
    def succeeded(self) -> bool:
        return self.key_recovered and self.blocks_verified == self.blocks_total


@dataclass(frozen=True)
class BlockRecovery:
    #: One entry per ciphertext; None where no verified plaintext was found.
    plaintexts: tuple[BitVector | None, ...]
    report: AttackReport

    @property
    def succeeded(self) -> bool:
        return self.report.succeeded


@dataclass(frozen=True)
class MessageRecovery:
    message: bytes | None
    report: AttackReport

    @property
    def succeeded(self) -> bool:
        return self.message is not None


@dataclass
class _SearchStats:
    dims_tried: list[int] = field(default_factory=list)
    candidates_tried: int = 0


def is_decrypting_key(b_prime: Sequence[int], p_prime: int) -> bool:
    """Sorted residues are superincreasing and their total stays below the modulus."""
    return is_superincreasing(sorted(b_prime)) and sum(b_prime) < p_prime


def sda_weights(n: int, t: int) -> tuple[int, ...]:
    """Weight of every residue column: the tolerance ``2**(n - i - 1)`` for 1-based ``i >= 2``."""
    return tuple(1 << max(0, n - i - 1) for i in range(2, t + 1))


def build_sda_lattice(
    a: Sequence[int], lambda_scale: int, weights: Sequence[int] | None = None
) -> IntegerBasis:
    """
    Simultaneous diophantine approximation basis for the first ``t = len(a)`` elements.

    Row 0 is ``(lambda_scale, w[1] * a[1], ..., w[t-1] * a[t-1])`` and row ``i >= 1`` has
    ``-w[i] * a[0]`` on the diagonal. The combination with coefficients ``(k[0], ..., k[t-1])``
    is ``(lambda_scale * k[0], w[i] * (a[i] * k[0] - a[0] * k[i]), ...)``.

    :param weights: Column weights for columns ``1..t-1``; all ones when omitted.
    """
    t = len(a)
    if t < MIN_LATTICE_DIM:
        raise InvalidParameterError(f"Lattice needs at least {MIN_LATTICE_DIM} elements, got {t}.")
    if any(value <= 0 for value in a):
        raise InvalidParameterError("Lattice elements must be positive.")
    if lambda_scale < 1:
        raise InvalidParameterError(f"'lambda_scale' must be at least 1, got {lambda_scale}.")
    if weights is None:
        weights = (1,) * (t - 1)
    if len(weights) != t - 1 or any(weight < 1 for weight in weights):
        raise InvalidParameterError(f"Expected {t - 1} positive column weights.")
    scales = (1, *weights)
    rows = [(lambda_scale, *(scales[i] * a[i] for i in range(1, t)))]
    for i in range(1, t):
        row = [0] * t
        row[i] = -scales[i] * a[0]
        rows.append(tuple(row))
    return IntegerBasis(tuple(rows))


def _candidate_rows(rows: Sequence[Sequence[int]]) -> Iterable[int]:
    for row in rows:
        yield row[0]
    # pairwise combinations reach short vectors that LLL leaves split across two rows
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            yield rows[i][0] + rows[j][0]
            yield rows[i][0] - rows[j][0]


def extract_candidates(
    result: ReductionResult, a: Sequence[int], config: AttackConfig
) -> list[int]:
    """
    Guesses for ``k[0]`` read off the first coordinate of the reduced rows, in row order.

    Sign is dropped, since a row and its negation name the same guess. Pairwise sums and
    differences of rows follow the single rows. Zero and values not divisible by
    ``lambda_scale`` are skipped.

    Guesses are reduced modulo ``a[0]``: ``k1`` and ``k1 + j * a[0]`` give the same ratio
    ``k1 / a[0]`` modulo 1, hence the same ``b'``, and refinement needs ``0 < k1 < a[0]``.
    Multiples of ``a[0]`` are dropped.
    """
    a1 = a[0]
    candidates: list[int] = []
    seen: set[int] = set()
    for first in _candidate_rows(result.reduced.rows):
        if len(candidates) >= config.max_candidates:
            break
        if first == 0 or first % config.lambda_scale:
            continue
        k1 = abs(first) // config.lambda_scale % a1
        if k1 == 0 or k1 in seen:
            continue
        seen.add(k1)
        candidates.append(k1)
    return candidates


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Rational with the smallest denominator strictly inside ``(lo, hi)``."""
    if not 0 <= lo < hi:
        raise InvalidParameterError(f"Expected 0 <= lo < hi, got ({lo}, {hi}).")
    terms: list[int] = []
    while True:
        whole = lo.numerator // lo.denominator
        if whole + 1 < hi:
            terms.append(whole + 1)
            break
        terms.append(whole)
        lo, hi = lo - whole, hi - whole
        if lo == 0:
            terms.append(hi.denominator // hi.numerator + 1)
            break
        lo, hi = 1 / hi, 1 / lo
    num, den = 1, 0
    for term in reversed(terms):
        num, den = term * num + den, num
    return Fraction(num, den)


def _tighten(
    window: tuple[Fraction, Fraction], alpha: int, beta: int
) -> tuple[Fraction, Fraction] | None:
    # intersect with alpha * rho - beta > 0
    lo, hi = window
    if alpha > 0:
        lo = max(lo, Fraction(beta, alpha))
    elif alpha < 0:
        hi = min(hi, Fraction(beta, alpha))
    elif beta >= 0:
        return None
    if lo >= hi:
        return None
    return lo, hi


def _feasible_window(
    a: Sequence[int], ks: Sequence[int], lo: Fraction, hi: Fraction
) -> tuple[Fraction, Fraction] | None:
    """
    Values of ``rho`` in ``(lo, hi)`` where the residues ``a[i] * rho - ks[i]`` are strictly
    superincreasing in index order and sum to less than one.
    """
    window: tuple[Fraction, Fraction] | None = (lo, hi)
    prefix_a = prefix_k = 0
    for value, k in zip(a, ks):
        assert window is not None
        window = _tighten(window, value - prefix_a, k - prefix_k)
        if window is None:
            return None
        prefix_a += value
        prefix_k += k
    assert window is not None
    return _tighten(window, -prefix_a, -(1 + prefix_k))


def refine_candidate(
    a: Sequence[int], k1: int, max_steps: int = DEFAULT_REFINEMENT_STEPS
) -> RecoveredKey | None:
    """
    Search upward from ``k1 / a[0]`` for a ratio ``U' / P'`` that turns ``a`` into a
    superincreasing sequence modulo ``P'``.

    Each step inspects one cell where every ``floor(a[i] * rho)`` is constant, and moves to the
    next breakpoint when the cell has no admissible ratio.
    """
    a1 = a[0]
    if a1 <= 1 or not 0 < k1 < a1:
        return None
    rho = Fraction(k1, a1)
    for step in range(max_steps):
        if rho >= 1:
            break
        ks = [value * rho.numerator // rho.denominator for value in a]
        lo = max(Fraction(k, value) for k, value in zip(ks, a) if value)
        hi = min(Fraction(k + 1, value) for k, value in zip(ks, a) if value)
        window = _feasible_window(a, ks, lo, min(hi, Fraction(1)))
        if window is not None:
            ratio = simplest_between(*window)
            key = RecoveredKey.from_pair(a, ratio.numerator, ratio.denominator, k1=k1)
            if key.superincreasing_when_sorted:
                log.debug(
                    "Candidate %d refined after %d steps to a %d-bit modulus",
                    k1,
                    step,
                    key.p_prime.bit_length(),
                )
                return key
        rho = hi
    return None


def _literal_key(a: Sequence[int], k1: int) -> RecoveredKey:
    return RecoveredKey.from_pair(a, k1, a[0], k1=k1)


def _score(key: RecoveredKey) -> int:
    return count_superincreasing_prefix(sorted(key.b_prime))


def _recover_key(
    a: Sequence[int], config: AttackConfig
) -> tuple[RecoveredKey | None, _SearchStats]:
    n = len(a)
    if n < config.t:
        raise InvalidParameterError(f"Knapsack has {n} elements, the lattice needs {config.t}.")
    stats = _SearchStats()
    if a[0] <= 1:
        log.info("First public element is %d; no modulus can be derived from it", a[0])
        return None, stats
    best: RecoveredKey | None = None
    seen: set[int] = set()
    for t in range(config.t, min(config.max_t, n) + 1):
        prefix = a[:t]
        if any(value <= 0 for value in prefix):
            log.info("Public elements must be positive to build the lattice")
            break
        basis = build_sda_lattice(prefix, config.lambda_scale, sda_weights(n, t))
        result = lll_reduce(basis, config.delta)
        stats.dims_tried.append(t)
        candidates = extract_candidates(result, prefix, config)
        log.debug("Lattice of dimension %d gave %d candidates", t, len(candidates))
        for k1 in candidates:
            if k1 in seen:
                continue
            seen.add(k1)
            stats.candidates_tried += 1
            literal = _literal_key(a, k1)
            if literal.superincreasing_when_sorted:
                return literal, stats
            key = refine_candidate(a, k1, config.max_refinement_steps)
            if key is not None:
                log.info("Recovered an equivalent key at dimension %d from candidate %d", t, k1)
                return key, stats
            if best is None or _score(literal) > _score(best):
                best = literal
    log.info("No equivalent key among %d candidates", stats.candidates_tried)
    return best, stats


def recover_key(a: Sequence[int], config: AttackConfig | None = None) -> RecoveredKey | None:
    """
    Derive an equivalent trapdoor from the public knapsack ``a``.

    :returns: The first candidate whose residues are superincreasing when sorted, or else the
        candidate with the longest superincreasing prefix, flagged with
        ``superincreasing_when_sorted=False``. None when the lattices yield no candidate.
    """
    key, _ = _recover_key(a, config or AttackConfig())
    return key


def _report(
    scheme: Scheme,
    a: Sequence[int],
    config: AttackConfig,
    key: RecoveredKey | None,
    stats: _SearchStats,
    started: float,
    **counts: int,
) -> AttackReport:
    return AttackReport(
        scheme=scheme,
        n=len(a),
        dims_tried=tuple(stats.dims_tried),
        delta=config.delta,
        lambda_scale=config.lambda_scale,
        candidates_tried=stats.candidates_tried,
        key=key,
        elapsed_seconds=time.perf_counter() - started,
        **counts,
    )


def _solve_verified(
    key: RecoveredKey, b_prime: Sequence[int], a: Sequence[int], c: int
) -> BitVector | None:
    bits = solve_selected_multiset(list(zip(b_prime, range(len(b_prime)))), key.unmask(c))
    if bits is None or sum(value for value, bit in zip(a, bits) if bit) != c:
        return None
    return bits


def attack_mh(
    a: Sequence[int], ciphertexts: Sequence[int], config: AttackConfig | None = None
) -> BlockRecovery:
    """
    Decrypt basic Merkle-Hellman ciphertexts from the public knapsack alone.

    Every returned plaintext has been re-encrypted under ``a`` and matched its ciphertext.
    """
    config = config or AttackConfig()
    started = time.perf_counter()
    key, stats = _recover_key(a, config)
    plaintexts: list[BitVector | None] = [None] * len(ciphertexts)
    if key is not None and key.superincreasing_when_sorted:
        for index, c in enumerate(ciphertexts):
            plaintexts[index] = _solve_verified(key, key.b_prime, a, c)
            if plaintexts[index] is None:
                log.info("Ciphertext %d failed re-encryption", index)
    report = _report(
        Scheme.MH,
        a,
        config,
        key,
        stats,
        started,
        blocks_total=len(ciphertexts),
        blocks_verified=sum(bits is not None for bits in plaintexts),
    )
    return BlockRecovery(plaintexts=tuple(plaintexts), report=report)


def attack_mh_message(
    pub: PublicKnapsack, env: CiphertextEnvelope, config: AttackConfig | None = None
) -> MessageRecovery:
    """Recover a framed byte message sent under the basic scheme."""
    if env.d_prime is not None:
        raise InvalidParameterError("Envelope carries a permutation selector; not MH traffic.")
    env.check_block_len(len(pub.a))
    recovery = attack_mh(pub.a, env.blocks, config)
    message = None
    if recovery.succeeded:
        message = join_blocks(recovery.plaintexts, env.msg_bit_len)  # type: ignore[arg-type]
    return MessageRecovery(message=message, report=recovery.report)


def attack_hwang(
    pub: HwangPublicKey, env: CiphertextEnvelope, config: AttackConfig | None = None
) -> MessageRecovery:
    """
    Decrypt permutation-combination traffic from the public key and the eavesdropped selector.

    The recovered residues are permuted and truncated with the same selector as the sender's
    public elements, so every block is an easy knapsack over the selected residues and is
    checked against the selected public elements.
    """
    config = config or AttackConfig()
    params = pub.params
    d_prime = check_envelope(env, params)
    started = time.perf_counter()
    key, stats = _recover_key(pub.a, config)
    verified: list[BitVector] = []
    if key is not None and key.superincreasing_when_sorted:
        working_b, _ = derive_working_knapsack(key.b_prime, d_prime, params)
        working_a, _ = derive_working_knapsack(pub.a, d_prime, params)
        for index, c in enumerate(env.blocks):
            bits = _solve_verified(key, working_b, working_a, c)
            if bits is None:
                log.info("Block %d failed re-encryption", index)
                break
            verified.append(bits)
    report = _report(
        Scheme.HWANG,
        pub.a,
        config,
        key,
        stats,
        started,
        blocks_total=len(env.blocks),
        blocks_verified=len(verified),
    )
    message = None
    if report.succeeded:
        message = join_blocks(verified, env.msg_bit_len)
    return MessageRecovery(message=message, report=report)


def true_multipliers(priv: MHPrivateKey, a: Sequence[int]) -> tuple[int, ...]:
    """``k[i] = (a[i] * U - b[i]) / p`` with ``U = w_inv``, the lattice target of the true key."""
    return tuple((value * priv.w_inv - b) // priv.p for value, b in zip(a, priv.b))


def tolerance_bound_holds(priv: MHPrivateKey) -> bool:
    """``b[i] * 2**(n - i) < p`` for every 1-based ``i``."""
    n = priv.n
    return all(b << (n - i) < priv.p for i, b in enumerate(priv.b, start=1))

