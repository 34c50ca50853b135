import json
import subprocess
import sys

from crooked import funcfile, vbf
from crooked.field import field_create


def run_cli(*args, expect=None):
    proc = subprocess.run(
        [sys.executable, "-m", "crooked.cli", *args],
        capture_output=True,
        text=True,
    )
    if expect is not None:
        assert proc.returncode == expect, (proc.stdout, proc.stderr)
    return proc


def test_construct_thm1_auto_and_verify(tmp_path):
    out = tmp_path / "f.json"
    run_cli(
        "construct", "--family", "thm1", "--n", "6", "--auto", "--seed", "1",
        "--out", str(out), expect=0,
    )
    ff = funcfile.parse(out.read_text())
    assert ff.provenance["family"] == "thm1"
    run_cli(
        "verify", "--in", str(out), "--checks", "apn,crooked,identity",
        "--json", "--summary", expect=0,
    )


def test_construct_explicit_params(tmp_path):
    out = tmp_path / "g.json"
    run_cli(
        "construct", "--family", "thm1", "--n", "6",
        "--s", "2", "--t", "1", "--K", "0",
        "--c", "primitive", "--d", "primitive",
        "--out", str(out), expect=0,
    )
    f = funcfile.parse(out.read_text()).to_truthtable()
    assert vbf.is_crooked(f).is_crooked


def test_construct_gold_bad_s_exits_2():
    proc = run_cli("construct", "--family", "gold", "--n", "6", "--s", "2", expect=2)
    assert "gcd" in proc.stdout


def test_construct_invalid_params_lists_violations():
    proc = run_cli(
        "construct", "--family", "thm1", "--n", "6",
        "--s", "3", "--t", "1", "--K", "0", "--c", "1", "--d", "1",
        expect=2,
    )
    assert "gcd" in proc.stdout


def test_verify_non_apn_exits_1(tmp_path):
    ctx = field_create(4)
    fifth = vbf.from_multinomial(vbf.multinomial(ctx, [(1, 5)]))
    path = tmp_path / "x5.json"
    path.write_text(funcfile.serialize(funcfile.from_truthtable_repr(fifth)))
    proc = run_cli("verify", "--in", str(path), "--checks", "apn", "--json", expect=1)
    report = json.loads(proc.stdout)
    assert report["delta"] == 4 and report["pass"] is False


def test_verify_malformed_exits_3(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{broken")
    run_cli("verify", "--in", str(path), "--checks", "apn", expect=3)


def test_invariants_self_and_mismatch(tmp_path):
    a = tmp_path / "a.json"
    run_cli("construct", "--family", "gold", "--n", "6", "--s", "1",
            "--out", str(a), expect=0)
    proc = run_cli("invariants", "--in", str(a), "--against", str(a),
                   "--json", expect=0)
    doc = json.loads(proc.stdout)
    assert doc["verdict"] == "indistinguishable-by-computed-invariants"

    b = tmp_path / "b.json"
    run_cli("construct", "--family", "gold", "--n", "4",
            "--modulus", "13", "--s", "1", "--out", str(b), expect=0)
    run_cli("invariants", "--in", str(a), "--against", str(b), expect=5)


def test_invariants_rank_cutoff_exits_4(tmp_path):
    a = tmp_path / "a12.json"
    run_cli("construct", "--family", "gold", "--n", "12", "--s", "1",
            "--out", str(a), expect=0)
    run_cli("invariants", "--in", str(a), "--against", str(a),
            "--depth", "ranks", expect=4)


def test_invariants_gold_all_reports(tmp_path):
    a = tmp_path / "t1.json"
    run_cli("construct", "--family", "thm1", "--n", "6", "--auto",
            "--out", str(a), expect=0)
    proc = run_cli("invariants", "--in", str(a), "--against", "gold-all",
                   "--json", expect=0)
    lines = [json.loads(l) for l in proc.stdout.splitlines() if l.strip()]
    assert len(lines) == 1  # n = 6 has a single Gold class
    assert lines[0]["against"] == "gold-s1"


def test_search_deterministic_and_exit_codes():
    p1 = run_cli("search", "--family", "thm1", "--n", "6", "--budget", "3",
                 "--seed", "7", expect=0)
    p2 = run_cli("search", "--family", "thm1", "--n", "6", "--budget", "3",
                 "--seed", "7", expect=0)
    assert p1.stdout == p2.stdout
    assert len(p1.stdout.splitlines()) == 3
    run_cli("search", "--family", "thm1", "--n", "7", expect=2)
    empty = run_cli("search", "--family", "thm1", "--n", "6", "--budget", "0",
                    expect=0)
    assert empty.stdout == ""


def test_construct_byte_identical_across_runs():
    args = ["construct", "--family", "thm2", "--n", "6", "--auto", "--seed", "9"]
    assert run_cli(*args, expect=0).stdout == run_cli(*args, expect=0).stdout
