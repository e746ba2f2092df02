import json
import subprocess
import sys

import pytest

from geofellow.automata import from_text
from geofellow.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_ball_radius_zero(capsys):
    code, out, _ = run(capsys, "ball", "--radius", "0")
    assert code == 0
    assert out == "x,y,layer,dist\n0,0,bottom,0\n"


def test_ball_radius_one(capsys):
    code, out, _ = run(capsys, "ball", "--radius", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "x,y,layer,dist"
    assert len(lines) == 5
    assert "0,0,top,1" in lines


def test_ball_row_count_matches_bfs(capsys, ball12):
    code, out, _ = run(capsys, "ball", "--radius", "12")
    assert code == 0
    assert len(out.strip().splitlines()) == 1 + len(ball12.entries)


def test_ball_dot_format(capsys):
    code, out, _ = run(capsys, "ball", "--radius", "1", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert out.count("->") == 3


def test_ball_radius_ceiling():
    with pytest.raises(SystemExit) as info:
        main(["ball", "--radius", "15"])
    assert info.value.code == 2


def test_check_theorem5_passes(capsys):
    code, out, _ = run(capsys, "check-theorem5", "--max-len", "4")
    assert code == 0
    assert "mismatches=0" in out
    assert out.strip().endswith("PASS")


def test_check_theorem5_fault_injection(capsys):
    code, out, _ = run(capsys, "check-theorem5", "--max-len", "3", "--inject-fault")
    assert code == 1
    assert "mismatch word=''" in out
    assert out.strip().endswith("FAIL")


def test_check_theorem5_ceiling():
    with pytest.raises(SystemExit):
        main(["check-theorem5", "--max-len", "12"])


def test_check_lemmas(capsys):
    code, out, _ = run(capsys, "check-lemmas", "--max-len", "7")
    assert code == 0
    assert out.count("PASS") == 5
    assert "lemma2-three-t-words: cases=121 failures=0" in out


def test_check_lemmas_csv(capsys):
    code, out, _ = run(capsys, "check-lemmas", "--max-len", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "target,count"
    assert len(lines) == 1 + 81 + 72
    assert '"(2,3,bottom)",3' in lines


def test_fftp_scan_stdout(capsys):
    code, out, _ = run(capsys, "fftp-scan", "--max-len", "2")
    assert code == 0
    assert out.startswith("word,endpoint,word_len,geo_len,min_k,witness\n")
    assert 'tt,"(0,0,bottom)",2,0,1,' in out
    assert "len,count_nongeodesic,max_min_k\n2,3,1" in out


def test_fftp_scan_deterministic_across_workers(tmp_path, capsys):
    out1 = tmp_path / "one.csv"
    out4 = tmp_path / "four.csv"
    assert main(["fftp-scan", "--max-len", "5", "--out", str(out1)]) == 0
    assert (
        main(["fftp-scan", "--max-len", "5", "--workers", "3", "--out", str(out4)])
        == 0
    )
    capsys.readouterr()
    assert out1.read_bytes() == out4.read_bytes()
    assert (tmp_path / "one.summary.csv").read_bytes() == (
        tmp_path / "four.summary.csv"
    ).read_bytes()


def test_fftp_scan_summary_goes_to_stdout_with_out(tmp_path, capsys):
    out = tmp_path / "scan.csv"
    code = main(["fftp-scan", "--max-len", "3", "--out", str(out)])
    captured = capsys.readouterr()
    assert code == 0
    assert "len=3 count_nongeodesic=15 max_min_k=2" in captured.out
    assert out.exists()


def test_fftp_scan_json_config_is_worker_free(tmp_path, capsys):
    out = tmp_path / "scan.json"
    assert main(
        ["fftp-scan", "--max-len", "3", "--format", "json", "--workers", "2",
         "--out", str(out)]
    ) == 0
    capsys.readouterr()
    doc = json.loads(out.read_text())
    assert doc["config"] == {
        "command": "fftp-scan",
        "max_len": 3,
        "format": "json",
        "seed": 0,
    }
    assert doc["summary"][-1] == {"len": 3, "count_nongeodesic": 15, "max_min_k": 2}
    assert all(set(row) == {
        "word", "endpoint", "word_len", "geo_len", "min_k", "witness"
    } for row in doc["rows"])


def test_fftp_scan_ceiling():
    with pytest.raises(SystemExit):
        main(["fftp-scan", "--max-len", "13"])


def test_witness_report(capsys):
    code, out, _ = run(capsys, "witness", "--n", "2")
    assert code == 0
    assert "word: ta^2ta^2t" in out
    assert "min_k: 6" in out
    assert "witness: a^2ta^2" in out
    assert "3 (0,2,top) (2,0,top) 6" in out


def test_witness_n_one(capsys):
    code, out, _ = run(capsys, "witness", "--n", "1")
    assert code == 0
    assert "min_k: 4" in out
    assert "witness: ata" in out


def test_witness_rejects_out_of_range():
    for bad in ("0", "7"):
        with pytest.raises(SystemExit) as info:
            main(["witness", "--n", bad])
        assert info.value.code == 2


def test_automaton_dump_roundtrip(capsys, acceptor):
    code, out, _ = run(capsys, "automaton", "dump")
    assert code == 0
    parsed = from_text(out)
    assert len(parsed.transitions) == 20


def test_automaton_minimize_default(capsys):
    code, out, _ = run(capsys, "automaton", "minimize")
    assert code == 0
    assert out.splitlines()[1] == "states 16"


def test_automaton_compare(tmp_path, capsys):
    dumped = tmp_path / "acceptor.txt"
    assert main(["automaton", "minimize", "--out", str(dumped)]) == 0
    capsys.readouterr()
    code, out, _ = run(capsys, "automaton", "compare", "acceptor", str(dumped))
    assert code == 0
    assert out == "equivalent: yes\n"


def test_automaton_compare_detects_difference(tmp_path, capsys):
    other = tmp_path / "other.txt"
    other.write_text(
        "alphabet a A t\nstates 1\nstart 0\naccepting 0\n"
        "0 a 0\n0 A 0\n0 t 0\n"
    )
    code, out, _ = run(capsys, "automaton", "compare", "acceptor", str(other))
    assert code == 1
    assert out == "equivalent: no\n"


def test_automaton_compare_arity(capsys):
    code, _, err = run(capsys, "automaton", "compare", "acceptor")
    assert code == 2
    assert err.startswith("error:")


def test_missing_file_is_reported(capsys):
    code, _, err = run(capsys, "automaton", "compare", "acceptor", "/no/such/file")
    assert code == 2
    assert err.startswith("error:")


def test_console_script_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "geofellow.cli", "ball", "--radius", "0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "x,y,layer,dist\n0,0,bottom,0\n"
