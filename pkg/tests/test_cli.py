from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from wittsig import cli
from wittsig.signature import Report


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def jsonl(text):
    return [json.loads(line) for line in text.splitlines()]


@pytest.mark.parametrize("k, sign", [(5, -1), (1, 1)])
def test_signature_examples(capsys, k, sign):
    code, out, _ = run(capsys, "signature", "--family", "D", "--rank", "5", "--k", str(k))
    assert code == 0
    (row,) = jsonl(out)
    assert row["sign"] == sign
    assert row == {"sign": sign, "family": "D", "rank": 5, "k": k, "conductor": 36}


def test_signature_many_k_csv(capsys):
    code, out, _ = run(capsys, "signature", "--family", "B", "--rank", "23", "--k", "9", "193", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["sign"] for r in rows] == ["1", "-1"]
    assert list(rows[0]) == ["sign", "family", "rank", "k", "conductor"]


def test_global_option_before_subcommand(capsys):
    code, out, _ = run(capsys, "--format", "text", "signature", "--family", "D", "--rank", "4", "--k", "9")
    assert code == 0
    header, line = out.splitlines()
    assert header.split() == ["sign", "family", "rank", "k", "conductor"]
    assert line.split()[0] == "-1"


def test_verify_periodicity(capsys):
    code, out, _ = run(capsys, "verify", "periodicity", "--rank", "4", "--window", "100")
    assert code == 0
    (row,) = jsonl(out)
    assert row["status"] == "ok" and row["claim"] == "periodicity"


@pytest.mark.parametrize(
    "claim, extra",
    [
        ("prop-d-odd-sign", []),
        ("prop-d-even-sign", []),
        ("prop-bd-separation", []),
        ("thm-independence-odd", []),
        ("thm-independence-even", []),
        ("thm-pointed-ising", []),
        ("lemma-s-parity", []),
        ("lemma-sine-galois", ["--m-max", "8"]),
        ("lemma-b-shift", ["--rank", "3", "5"]),
        ("dimension-check", []),
        ("central-charge", []),
        ("t-order", []),
        ("anisotropy-d4", []),
    ],
)
def test_verify_claims(capsys, claim, extra):
    code, out, _ = run(capsys, "-q", "verify", claim, *extra)
    assert code == 0, out
    rows = jsonl(out)
    assert rows and all(r["status"] == "ok" for r in rows)


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setitem(cli.CLAIMS, "always-fails", lambda a, cfg: [Report("always-fails", {}, 1, 2, "fail")])
    code, out, err = run(capsys, "verify", "always-fails")
    assert code == 1
    assert jsonl(out)[0]["status"] == "fail"
    assert "verification failed" in err


def test_precision_exhaustion_exit_code(capsys):
    code, _, err = run(capsys, "signature", "--family", "D", "--rank", "13", "--k", "13",
                       "--precision-start", "2", "--precision-cap", "4")
    assert code == 1
    assert "verification failure" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "no-such-claim"],
        ["signature", "--family", "D", "--rank", "5", "--k", "3"],
        ["signature", "--family", "B", "--rank", "100000", "--k", "1"],
        ["--precision-start", "512", "--precision-cap", "128", "signature", "--family", "D", "--rank", "3", "--k", "1"],
        ["verify", "prop-d-odd-sign", "--rank", "4"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert "error" in err


def test_conductor_guard_message(capsys):
    code, _, err = run(capsys, "--conductor-guard", "100", "signature", "--family", "B", "--rank", "23", "--k", "9")
    assert code == 2
    assert "368" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["signature", "--family", "E", "--rank", "3", "--k", "1"])
    assert exc.value.code == 2


def test_alcove(capsys):
    code, out, _ = run(capsys, "alcove", "--rank", "2")
    assert code == 0
    rows = jsonl(out)
    assert len(rows) == 25
    assert set(rows[0]) == {"coords2", "level_pairing"}


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "--rank", "3", "--n", "1", "0")
    assert code == 0
    (row,) = jsonl(out)
    assert row["t_order"] == 80 and row["t_order_2_power"] == 4
    assert row["xi_1"].startswith("0.7071067811865475244")
    code, out, _ = run(capsys, "invariants", "--rank", "3", "--objects")
    rows = jsonl(out)
    assert rows[0]["twist_denominator"] == 80 and rows[0]["qdim"] == "1.0"


def test_anisotropy_formats(capsys):
    code, out, _ = run(capsys, "-q", "anisotropy", "--format", "text")
    assert code == 0
    assert "verdict: completely anisotropic" in out
    code, out, _ = run(capsys, "-q", "anisotropy", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 35


def test_config_file_and_env(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"format": "csv", "precision_start_bits": 64}))
    code, out, _ = run(capsys, "--config", str(cfg), "signature", "--family", "D", "--rank", "5", "--k", "5")
    assert code == 0 and out.startswith("sign,family")
    monkeypatch.setenv(cli.CONFIG_ENV, str(cfg))
    code, out, _ = run(capsys, "signature", "--family", "D", "--rank", "5", "--k", "5")
    assert out.startswith("sign,family")
    # command-line flags win over the file
    code, out, _ = run(capsys, "signature", "--family", "D", "--rank", "5", "--k", "5", "--format", "json")
    assert jsonl(out)[0]["sign"] == -1


def test_bad_config(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"colour": "blue"}))
    code, _, err = run(capsys, "--config", str(cfg), "alcove", "--rank", "2")
    assert code == 2 and "unknown config keys" in err
    code, _, err = run(capsys, "--config", str(tmp_path / "missing.json"), "alcove", "--rank", "2")
    assert code == 2


def test_output_file_and_determinism(capsys, tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    for path in (a, b):
        assert cli.main(["-q", "verify", "thm-independence-odd", "--output", str(path)]) == 0
    assert capsys.readouterr().out == ""
    assert a.read_bytes() == b.read_bytes()
    assert len(a.read_text().splitlines()) == 3


def test_progress_goes_to_stderr(capsys):
    code, out, err = run(capsys, "invariants", "--rank", "2")
    assert "wittsig:" in err
    assert "wittsig:" not in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "wittsig", "signature", "--family", "D", "--rank", "5", "--k", "5"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["sign"] == -1
