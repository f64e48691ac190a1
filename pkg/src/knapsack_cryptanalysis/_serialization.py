# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors

"""
TOML documents for keys, ciphertexts and reports.

Every document carries a ``format`` tag naming its kind and a ``version``. Integers that can
outgrow 64 bits are written as decimal strings. Documents are validated against the JSON
Schemas shipped in ``schemas/`` before any field is interpreted.
"""

from __future__ import annotations

import hashlib
import json
from collections import UserDict
from fractions import Fraction
from logging import getLogger
from pathlib import Path
from typing import TYPE_CHECKING

try:
    import tomllib
except ImportError:
    import tomli as tomllib

import tomli_w
from jsonschema import Draft202012Validator, validators
from packaging.version import InvalidVersion, Version

from ._constants import FORMAT_PREFIX, FORMAT_VERSION, FileKind, Scheme
from ._envelope import CiphertextEnvelope
from ._exceptions import FormatError, ValidationErrors
from ._hwang import HwangParams, HwangPrivateKey, HwangPublicKey
from ._knapsack import MHPrivateKey, PublicKnapsack, SuperincreasingSequence

if TYPE_CHECKING:
    from collections.abc import Iterable
    from typing import Any, ClassVar

    try:
        from typing import Self
    except ImportError:  # py 3.11+ required for Self
        from typing_extensions import Self

    from jsonschema import Validator

    from ._attack import AttackReport

log = getLogger(__name__)

SCHEMAS_DIR = Path(__file__).parent / "schemas"

AnyPublicKey = PublicKnapsack | HwangPublicKey
AnyPrivateKey = MHPrivateKey | HwangPrivateKey


def format_tag(kind: FileKind) -> str:
    return f"{FORMAT_PREFIX}/{kind.value}"


def _decimals(values: Iterable[int]) -> list[str]:
    return [str(value) for value in values]


def _ints(values: Iterable[str]) -> tuple[int, ...]:
    return tuple(int(value) for value in values)


def fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


class _Validated:
    schema_name: ClassVar[str]
    _validator_cls = validators.create(
        meta_schema=Draft202012Validator.META_SCHEMA,
        validators=dict(Draft202012Validator.VALIDATORS),
    )

    def _validator_inst(self) -> Validator:
        schema = json.loads((SCHEMAS_DIR / f"{self.schema_name}.schema.json").read_text())
        return self._validator_cls(schema)

    def validate(self) -> None:
        errors = list(self._validator_inst().iter_errors(self.data))  # type: ignore[attr-defined]
        if errors:
            raise ValidationErrors("Validation error", errors)


class Document(UserDict, _Validated):
    """Dict-like view of one on-disk document of a fixed kind."""

    kind: ClassVar[FileKind]

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if kind := cls.__dict__.get("kind"):
            cls.schema_name = kind.value

    @classmethod
    def new(cls, **fields: Any) -> Self:
        return cls({"format": format_tag(cls.kind), "version": FORMAT_VERSION, **fields})

    @classmethod
    def loads(cls, text: str) -> Self:
        inst = cls(tomllib.loads(text))
        inst.check_format()
        inst.validate()
        return inst

    @classmethod
    def from_path(cls, path: str | Path) -> Self:
        try:
            return cls.loads(Path(path).read_text())
        except tomllib.TOMLDecodeError as exc:
            raise FormatError(f"'{path}' is not valid TOML: {exc}") from exc

    def check_format(self) -> None:
        expected = format_tag(self.kind)
        if (found := self.data.get("format")) != expected:
            raise FormatError(f"Expected a '{expected}' document, found {found!r}.")
        try:
            version = Version(str(self.data.get("version")))
        except InvalidVersion as exc:
            raise FormatError(f"Invalid format version {self.data.get('version')!r}.") from exc
        if version.major != Version(FORMAT_VERSION).major:
            raise FormatError(
                f"Format version {version} is not supported; this release reads {FORMAT_VERSION}."
            )

    def dumps(self) -> str:
        return tomli_w.dumps(self.data)

    def write(self, path: str | Path) -> Path:
        path = Path(path)
        path.write_text(self.dumps())
        log.debug("Wrote %s to %s", self.kind.value, path)
        return path

    @property
    def scheme(self) -> Scheme:
        return Scheme(self.data["scheme"])


def _params_table(
    key: AnyPublicKey | AnyPrivateKey, n: int, gap_bits: int | None
) -> dict[str, int]:
    if isinstance(key, (HwangPublicKey, HwangPrivateKey)):
        params = key.params
        return {
            "subsets": params.s,
            "subset_size": params.g,
            "select": params.c,
            "gap_bits": params.gap_bits,
        }
    table = {"n": n}
    if gap_bits is not None:
        table["gap_bits"] = gap_bits
    return table


def _scheme_of(key: AnyPublicKey | AnyPrivateKey) -> Scheme:
    if isinstance(key, (HwangPublicKey, HwangPrivateKey)):
        return Scheme.HWANG
    return Scheme.MH


class _KeyDocument(Document):
    def hwang_params(self) -> HwangParams:
        params = self.data["params"]
        return HwangParams(
            s=params["subsets"],
            g=params["subset_size"],
            c=params["select"],
            gap_bits=params["gap_bits"],
        )

    @property
    def gap_bits(self) -> int | None:
        return self.data["params"].get("gap_bits")

    def public_key(self) -> AnyPublicKey:
        a = _ints(self.data["public"]["a"])
        if self.scheme == Scheme.HWANG:
            return HwangPublicKey(a=a, params=self.hwang_params())
        if len(a) != (n := self.data["params"]["n"]):
            raise FormatError(f"Public key has {len(a)} elements, params declare n={n}.")
        return PublicKnapsack(a)


class PublicKeyDocument(_KeyDocument):
    kind = FileKind.PUBLIC_KEY

    @classmethod
    def from_key(cls, pub: AnyPublicKey, gap_bits: int | None = None) -> Self:
        return cls.new(
            scheme=_scheme_of(pub).value,
            params=_params_table(pub, len(pub.a), gap_bits),
            public={"a": _decimals(pub.a)},
        )

    def canonical_bytes(self) -> bytes:
        return json.dumps(self.data, sort_keys=True, separators=(",", ":")).encode()

    def fingerprint(self) -> str:
        """First 16 hex digits of SHA-256 over the canonical JSON form of this document."""
        return hashlib.sha256(self.canonical_bytes()).hexdigest()[:16]


class PrivateKeyDocument(_KeyDocument):
    kind = FileKind.PRIVATE_KEY

    @classmethod
    def from_key(cls, priv: AnyPrivateKey, gap_bits: int | None = None) -> Self:
        return cls.new(
            scheme=_scheme_of(priv).value,
            params=_params_table(priv, priv.n, gap_bits),
            public={"a": _decimals(priv.public_key().a)},
            private={
                "b": _decimals(priv.b),
                "p": str(priv.p),
                "w": str(priv.w),
                "w_inv": str(priv.w_inv),
            },
        )

    def private_key(self) -> AnyPrivateKey:
        private = self.data["private"]
        fields = {
            "b": SuperincreasingSequence(_ints(private["b"])),
            "p": int(private["p"]),
            "w": int(private["w"]),
            "w_inv": int(private["w_inv"]),
        }
        key: AnyPrivateKey
        if self.scheme == Scheme.HWANG:
            key = HwangPrivateKey(params=self.hwang_params(), **fields)
        else:
            key = MHPrivateKey(**fields)
        if key.public_key().a != self.public_key().a:
            raise FormatError("Public table does not match the private key material.")
        return key

    def public_document(self) -> PublicKeyDocument:
        return PublicKeyDocument.new(
            scheme=self.data["scheme"],
            params=dict(self.data["params"]),
            public={"a": list(self.data["public"]["a"])},
        )


class CiphertextDocument(Document):
    kind = FileKind.CIPHERTEXT

    @classmethod
    def from_envelope(cls, env: CiphertextEnvelope) -> Self:
        fields: dict[str, Any] = {
            "scheme": (Scheme.MH if env.d_prime is None else Scheme.HWANG).value,
            "msg_bit_len": env.msg_bit_len,
            "blocks": _decimals(env.blocks),
        }
        if env.d_prime is not None:
            fields["d_prime"] = str(env.d_prime)
        return cls.new(**fields)

    def envelope(self) -> CiphertextEnvelope:
        d_prime = self.data.get("d_prime")
        return CiphertextEnvelope(
            blocks=_ints(self.data["blocks"]),
            msg_bit_len=self.data["msg_bit_len"],
            d_prime=None if d_prime is None else int(d_prime),
        )


class AttackReportDocument(Document):
    kind = FileKind.ATTACK_REPORT

    @classmethod
    def from_report(cls, report: AttackReport, timings: bool = True) -> Self:
        fields: dict[str, Any] = {
            "scheme": report.scheme.value,
            "n": report.n,
            "succeeded": report.succeeded,
            "key_recovered": report.key_recovered,
            "dims_tried": list(report.dims_tried),
            "delta": fraction_str(report.delta),
            "lambda_scale": str(report.lambda_scale),
            "candidates_tried": report.candidates_tried,
            "blocks_total": report.blocks_total,
            "blocks_verified": report.blocks_verified,
        }
        if timings:
            fields["elapsed_seconds"] = round(report.elapsed_seconds, 6)
        if (key := report.key) is not None:
            fields["key"] = {
                "u_prime": str(key.u_prime),
                "p_prime": str(key.p_prime),
                "k1": str(key.k1),
                "superincreasing_when_sorted": key.superincreasing_when_sorted,
            }
        return cls.new(**fields)

    @property
    def succeeded(self) -> bool:
        return self.data["succeeded"]


class ExperimentReportDocument(Document):
    kind = FileKind.EXPERIMENT_REPORT

    @property
    def points(self) -> list[dict[str, Any]]:
        return self.data["points"]
