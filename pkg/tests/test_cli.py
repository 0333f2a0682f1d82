import json
import subprocess
import sys


from traceforms.cli import main


def _run_main(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def _run_fresh_process(argv, stdin_file=None):
    cmd = [sys.executable, "-m", "traceforms.cli", *argv]
    return subprocess.run(cmd, capture_output=True, text=True)


def test_realize_one_dim(capsys):
    code, out = _run_main(["realize", "--diag", "5"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["f"] == ["-5", "1"]
    assert data["alpha"] == ["5"]


def test_realize_verify_round_trip(tmp_path, capsys):
    code, out = _run_main(["realize", "--diag", "1,1", "--seed", "7"], capsys)
    assert code == 0
    cert_file = tmp_path / "cert.json"
    cert_file.write_text(out)
    code, out = _run_main(["verify", str(cert_file)], capsys)
    assert code == 0
    assert json.loads(out) == {"valid": True}


def test_realize_reverifies_in_fresh_process(tmp_path):
    first = _run_fresh_process(["realize", "--diag", "2,-3,5", "--seed", "9"])
    assert first.returncode == 0
    cert_file = tmp_path / "cert.json"
    cert_file.write_text(first.stdout)
    second = _run_fresh_process(["verify", str(cert_file)])
    assert second.returncode == 0
    assert json.loads(second.stdout) == {"valid": True}


def test_byte_identical_output():
    a = _run_fresh_process(["realize", "--diag", "1,-1,7", "--seed", "123"])
    b = _run_fresh_process(["realize", "--diag", "1,-1,7", "--seed", "123"])
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    c = _run_fresh_process(["galois", "--diag", "1,2,3", "--primes", "40", "--seed", "5"])
    d = _run_fresh_process(["galois", "--diag", "1,2,3", "--primes", "40", "--seed", "5"])
    assert c.stdout == d.stdout


def test_realize_degenerate_is_usage_error(capsys):
    code, _ = _run_main(["realize", "--diag", "1,0"], capsys)
    assert code == 2


def test_verify_detects_tampered_alpha(tmp_path, capsys):
    code, out = _run_main(["realize", "--diag", "1,1", "--seed", "7"], capsys)
    data = json.loads(out)
    data["alpha"] = ["1"]
    bad_file = tmp_path / "tampered.json"
    bad_file.write_text(json.dumps(data))
    code, out = _run_main(["verify", str(bad_file)], capsys)
    assert code == 1
    assert json.loads(out) == {"valid": False, "failed_clause": "gram_mismatch"}


def test_verify_malformed_json(tmp_path, capsys):
    bad = tmp_path / "broken.json"
    bad.write_text('{"D": [truncated')
    code, _ = _run_main(["verify", str(bad)], capsys)
    assert code == 2
    missing = tmp_path / "missing_keys.json"
    missing.write_text('{"D": {"diag": ["1"]}}')
    code, _ = _run_main(["verify", str(missing)], capsys)
    assert code == 2
    code, _ = _run_main(["verify", str(tmp_path / "nonexistent.json")], capsys)
    assert code == 2


def test_invariants_output(capsys):
    code, out = _run_main(["invariants", "--diag", "2,3"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["disc"] == "6"
    assert data["hasse_minus_one_at"] == ["2", "3"]
    assert data["signature"] == [2, 0]


def test_invariants_degenerate(capsys):
    code, _ = _run_main(["invariants", "--diag", "1,0"], capsys)
    assert code == 2


def test_equivalent_exit_codes(capsys):
    code, out = _run_main(["equivalent", "--diag", "1,1", "--diag", "2,2"], capsys)
    assert code == 0 and json.loads(out)["equivalent"] is True
    code, out = _run_main(["equivalent", "--diag", "1,1", "--diag", "1,-1"], capsys)
    assert code == 1 and json.loads(out)["equivalent"] is False
    code, _ = _run_main(["equivalent", "--diag", "1,1"], capsys)
    assert code == 2


def test_form_file_input(tmp_path, capsys):
    form_file = tmp_path / "form.json"
    form_file.write_text(json.dumps({"gram": [["0", "1"], ["1", "0"]]}))
    code, out = _run_main(["invariants", "--form", str(form_file)], capsys)
    assert code == 0
    assert json.loads(out)["disc"] == "-1"
    diag_file = tmp_path / "diag.json"
    diag_file.write_text(json.dumps({"diag": ["1", "-1"]}))
    code, out = _run_main(
        ["equivalent", "--form", str(form_file), "--form", str(diag_file)], capsys
    )
    assert code == 0


def test_galois_cli(capsys):
    code, out = _run_main(
        ["galois", "--n", "3", "--diag", "1,1,1", "--primes", "150", "--seed", "1"],
        capsys,
    )
    data = json.loads(out)
    assert data["n"] == 3
    assert data["sn_verdict"] in ("certified", "inconclusive")
    assert (code == 0) == (data["sn_verdict"] == "certified")
    counts = data["cycle_stats"]["counts"]
    assert sum(counts.values()) == data["cycle_stats"]["primes_used"] == 150

    code, _ = _run_main(["galois", "--diag", "1,0,1", "--primes", "10"], capsys)
    assert code == 2
    code, _ = _run_main(["galois", "--n", "2", "--diag", "1,1,1", "--primes", "10"], capsys)
    assert code == 2
    code, _ = _run_main(["galois", "--primes", "10"], capsys)
    assert code == 2


def test_group_verify_cli(capsys):
    code, out = _run_main(["group-verify", "--p", "2", "--k", "1", "--m", "3"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["lemma_a"] is True
    assert data["lemma_b"]["derived"] is True and data["lemma_b"]["exhaustive"] is True
    assert all(row["ok"] for row in data["lemma_c"])

    code, _ = _run_main(["group-verify", "--p", "2", "--k", "1", "--m", "4"], capsys)
    assert code == 2

    code, out = _run_main(
        ["group-verify", "--p", "2", "--k", "1", "--m", "15", "--n", "5"], capsys
    )
    assert code == 0
    data = json.loads(out)
    assert data["lemma_c"] == [{"n": 5, "index_H0": 10, "index_H1": 5, "ok": True}]


def test_quiet_flag(capsys):
    code, out = _run_main(["invariants", "--diag", "1,1", "--quiet"], capsys)
    assert code == 0 and out == ""


def test_usage_error_exit_code(capsys):
    assert main(["realize"]) == 2  # no form given
    assert main(["no-such-command"]) == 2
