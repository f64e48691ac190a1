# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors
import logging
import subprocess
import sys

import pytest

from knapsack_cryptanalysis import CounterRandom, PublicKnapsack
from knapsack_cryptanalysis._cli import app
from knapsack_cryptanalysis._cli.keygen import key_paths
from knapsack_cryptanalysis._constants import ExitCode
from knapsack_cryptanalysis._serialization import (
    AttackReportDocument,
    ExperimentReportDocument,
    PrivateKeyDocument,
    PublicKeyDocument,
)


def _run(args, code=ExitCode.OK):
    with pytest.raises(SystemExit, check=lambda exc: exc.code == code):
        app([str(arg) for arg in args])


def _keygen(tmp_path, name, *args):
    _run(["keygen", "--out", tmp_path / name, *args])
    return key_paths(tmp_path / name)


def _hwang_keygen(tmp_path, name="desk", seed=11):
    return _keygen(
        tmp_path,
        name,
        "--scheme=hwang",
        "--subsets=8",
        "--subset-size=5",
        "--select=3",
        "--gap-bits=8",
        f"--seed={seed}",
    )


def test_run_module_help():
    subprocess.run([sys.executable, "-m", "knapsack_cryptanalysis", "--help"], check=True)


def test_keygen_mh(tmp_path):
    key, pub = _keygen(tmp_path, "alice", "--scheme=mh", "--n=8", "--gap-bits=8", "--seed=42")
    priv = PrivateKeyDocument.from_path(key).private_key()
    assert priv.n == 8
    assert PublicKeyDocument.from_path(pub).public_key() == priv.public_key()
    assert "private" not in pub.read_text()


def test_keygen_is_deterministic(tmp_path):
    first = _keygen(tmp_path, "one", "--n=8", "--seed=42")
    second = _keygen(tmp_path, "two", "--n=8", "--seed=42")
    for a, b in zip(first, second):
        assert a.read_bytes() == b.read_bytes()


def test_keygen_rejects_parameters(tmp_path):
    _run(["keygen", "--out", tmp_path / "bad", "--n=0", "--seed=1"], ExitCode.PARAMETER_ERROR)
    _run(
        ["keygen", "--out", tmp_path / "bad", "--scheme=hwang", "--subset-size=3", "--select=4"],
        ExitCode.PARAMETER_ERROR,
    )
    _run(["keygen", "--out", tmp_path / "bad", "--seed=-1"], ExitCode.PARAMETER_ERROR)


@pytest.mark.slow
def test_keygen_full_size(tmp_path):
    key, _ = _keygen(tmp_path, "full", "--scheme=hwang", "--seed=1")
    assert PrivateKeyDocument.from_path(key).private_key().n == 1360


def test_hwang_round_trip(tmp_path):
    key, pub = _hwang_keygen(tmp_path)
    (tmp_path / "msg").write_bytes(b"attack at dawn")
    _run(["encrypt", "--pub", pub, "--msg", tmp_path / "msg", "--out", tmp_path / "ct.toml"])
    _run(["decrypt", "--key", key, "--ct", tmp_path / "ct.toml", "--out", tmp_path / "plain"])
    assert (tmp_path / "plain").read_bytes() == b"attack at dawn"


def test_mh_round_trip(tmp_path):
    key, pub = _keygen(tmp_path, "mh", "--n=8", "--seed=5")
    message = CounterRandom(5).randbytes(1)
    (tmp_path / "msg").write_bytes(message)
    _run(["encrypt", "--pub", pub, "--msg", tmp_path / "msg", "--out", tmp_path / "ct.toml"])
    _run(["decrypt", "--key", key, "--ct", tmp_path / "ct.toml", "--out", tmp_path / "plain"])
    assert (tmp_path / "plain").read_bytes() == message


def test_encrypt_empty_message(tmp_path):
    _, pub = _keygen(tmp_path, "mh", "--n=8", "--seed=5")
    (tmp_path / "msg").write_bytes(b"")
    _run(
        ["encrypt", "--pub", pub, "--msg", tmp_path / "msg", "--out", tmp_path / "ct.toml"],
        ExitCode.PARAMETER_ERROR,
    )
    assert not (tmp_path / "ct.toml").exists()


def test_decrypt_wrong_key(tmp_path):
    _, pub = _keygen(tmp_path, "alice", "--n=16", "--seed=1")
    key, _ = _keygen(tmp_path, "mallory", "--n=16", "--seed=2")
    (tmp_path / "msg").write_bytes(b"attack at dawn")
    _run(["encrypt", "--pub", pub, "--msg", tmp_path / "msg", "--out", tmp_path / "ct.toml"])
    _run(
        ["decrypt", "--key", key, "--ct", tmp_path / "ct.toml", "--out", tmp_path / "plain"],
        ExitCode.DECRYPTION_FAILURE,
    )
    assert not (tmp_path / "plain").exists()


def test_decrypt_scheme_mismatch(tmp_path):
    key, _ = _keygen(tmp_path, "mh", "--n=8", "--seed=1")
    _, pub = _hwang_keygen(tmp_path)
    (tmp_path / "msg").write_bytes(b"hi")
    _run(["encrypt", "--pub", pub, "--msg", tmp_path / "msg", "--out", tmp_path / "ct.toml"])
    _run(
        ["decrypt", "--key", key, "--ct", tmp_path / "ct.toml", "--out", tmp_path / "plain"],
        ExitCode.PARAMETER_ERROR,
    )


def test_invalid_key_file(tmp_path, caplog):
    caplog.set_level(logging.ERROR)
    pub = tmp_path / "broken.pub.toml"
    pub.write_text(
        'format = "knapsack-cryptanalysis/public-key"\nversion = "1.0"\nscheme = "rsa"\n'
    )
    (tmp_path / "msg").write_bytes(b"hi")
    _run(
        ["encrypt", "--pub", pub, "--msg", tmp_path / "msg", "--out", tmp_path / "ct.toml"],
        ExitCode.PARAMETER_ERROR,
    )
    assert "scheme" in caplog.text


def test_missing_file(tmp_path):
    (tmp_path / "msg").write_bytes(b"hi")
    _run(
        ["encrypt", "--pub", tmp_path / "nope", "--msg", tmp_path / "msg", "--out", "c"],
        ExitCode.PARAMETER_ERROR,
    )


def test_attack_hwang(tmp_path):
    _, pub = _hwang_keygen(tmp_path)
    (tmp_path / "msg").write_bytes(b"attack at dawn")
    _run(["encrypt", "--pub", pub, "--msg", tmp_path / "msg", "--out", tmp_path / "ct.toml"])
    _run(["attack-hwang", "--pub", pub, "--ct", tmp_path / "ct.toml", "--out", tmp_path / "got"])
    assert (tmp_path / "got").read_bytes() == b"attack at dawn"
    report = AttackReportDocument.from_path(tmp_path / "got.report.toml")
    assert report.succeeded
    assert report["scheme"] == "hwang"


def test_attack_mh(tmp_path):
    _, pub = _keygen(tmp_path, "mh", "--n=8", "--gap-bits=8", "--seed=3")
    (tmp_path / "msg").write_bytes(b"attack at dawn")
    _run(["encrypt", "--pub", pub, "--msg", tmp_path / "msg", "--out", tmp_path / "ct.toml"])
    args = ["attack-mh", "--pub", pub, "--ct", tmp_path / "ct.toml", "--out", tmp_path / "got"]
    _run([*args, "--report", tmp_path / "report.toml"])
    report = AttackReportDocument.from_path(tmp_path / "report.toml")
    assert report.succeeded
    assert (tmp_path / "got").read_bytes() == b"attack at dawn"


def test_attack_random_public_key(tmp_path):
    rng = CounterRandom(9)
    pub = tmp_path / "random.pub.toml"
    a = tuple(rng.randint(2**40, 2**48) for _ in range(12))
    PublicKeyDocument.from_key(PublicKnapsack(a)).write(pub)
    (tmp_path / "msg").write_bytes(b"attack at dawn")
    _run(["encrypt", "--pub", pub, "--msg", tmp_path / "msg", "--out", tmp_path / "ct.toml"])
    _run(
        [
            "attack-mh",
            "--pub",
            pub,
            "--ct",
            tmp_path / "ct.toml",
            "--out",
            tmp_path / "got",
            "--max-lattice-dim=6",
        ],
        ExitCode.ATTACK_FAILURE,
    )
    report = AttackReportDocument.from_path(tmp_path / "got.report.toml")
    assert not report["key_recovered"]
    assert not (tmp_path / "got").exists()


def test_attack_scheme_mismatch(tmp_path):
    _, pub = _hwang_keygen(tmp_path)
    (tmp_path / "msg").write_bytes(b"hi")
    _run(["encrypt", "--pub", pub, "--msg", tmp_path / "msg", "--out", tmp_path / "ct.toml"])
    _run(
        ["attack-mh", "--pub", pub, "--ct", tmp_path / "ct.toml", "--out", tmp_path / "got"],
        ExitCode.PARAMETER_ERROR,
    )


@pytest.mark.parametrize("option", ["--delta=1/8", "--delta=half", "--lattice-dim=2"])
def test_attack_rejects_options(tmp_path, option):
    _, pub = _hwang_keygen(tmp_path)
    (tmp_path / "msg").write_bytes(b"hi")
    _run(["encrypt", "--pub", pub, "--msg", tmp_path / "msg", "--out", tmp_path / "ct.toml"])
    _run(
        ["attack-hwang", "--pub", pub, "--ct", tmp_path / "ct.toml", "--out", "got", option],
        ExitCode.PARAMETER_ERROR,
    )


def test_experiment_is_reproducible(tmp_path):
    for name in ("one.toml", "two.toml"):
        _run(
            [
                "experiment",
                "--out",
                tmp_path / name,
                "--n=8",
                "--trials=3",
                "--seed=1",
                "--no-timings",
            ]
        )
    assert (tmp_path / "one.toml").read_bytes() == (tmp_path / "two.toml").read_bytes()
    report = ExperimentReportDocument.from_path(tmp_path / "one.toml")
    assert [point["n"] for point in report.points] == [8]
    assert report.points[0]["trials"] == 3
    assert "mean_seconds" not in report.points[0]


def test_experiment_hwang(tmp_path):
    _run(
        [
            "experiment",
            "--out",
            tmp_path / "report.toml",
            "--scheme=hwang",
            "--subsets=8",
            "--subset-size=5",
            "--select=3",
            "--trials=2",
        ]
    )
    point = ExperimentReportDocument.from_path(tmp_path / "report.toml").points[0]
    assert (point["subsets"], point["subset_size"], point["select"], point["n"]) == (8, 5, 3, 40)


def test_experiment_rejects_grid(tmp_path):
    _run(
        ["experiment", "--out", tmp_path / "r.toml", "--n=4", "--lattice-dim=5"],
        ExitCode.PARAMETER_ERROR,
    )
