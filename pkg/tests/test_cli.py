"""spctl command line behavior: files in, reports out, exit codes."""

import json

import pytest

from addcomb.cli import main
from addcomb.sets import RatSet, read_set_file


def run(argv):
    return main(argv)


def test_gen_writes_set_file(tmp_path):
    out = tmp_path / "ap.txt"
    assert run(["gen", "--kind", "AP", "--start", "1", "--step", "2",
                "--n", "5", "--out", str(out)]) == 0
    assert read_set_file(out) == RatSet([1, 3, 5, 7, 9])


def test_gen_literal_values(tmp_path):
    out = tmp_path / "lit.txt"
    assert run(["gen", "--kind", "Literal", "--values", "1/2,3,-5",
                "--out", str(out)]) == 0
    assert read_set_file(out) == RatSet(["1/2", 3, -5])


def test_energy_json_report(tmp_path, capsys):
    s = tmp_path / "s.txt"
    s.write_text("1\n2\n3\n")
    rep = tmp_path / "e.json"
    assert run(["energy", "--set", str(s), "--k", "2",
                "--flavor", "additive", "--json", str(rep)]) == 0
    assert capsys.readouterr().out.strip() == "19"
    doc = json.loads(rep.read_text())
    assert doc["schema"] == "addcomb-report/1"
    assert doc["payload"]["value"] == 19


def test_triples_report(tmp_path, capsys):
    s = tmp_path / "s.txt"
    s.write_text("0\n1\n2\n")
    assert run(["triples", "--set", str(s)]) == 0
    assert "T=273" in capsys.readouterr().out


def test_ratios_single_set_repeats(tmp_path, capsys):
    s = tmp_path / "s.txt"
    s.write_text("1\n2\n")
    assert run(["ratios", "--set", str(s)]) == 0
    assert "R=" in capsys.readouterr().out


def test_decompose_and_regularize(tmp_path, capsys):
    s = tmp_path / "s.txt"
    s.write_text("\n".join(str(v) for v in range(1, 17)))
    assert run(["decompose", "--set", str(s), "--mode", "xy"]) == 0
    assert "xy:" in capsys.readouterr().out
    assert run(["regularize", "--set", str(s), "--k", "2"]) == 0
    assert "steps=" in capsys.readouterr().out


def test_incidence_arrangement_file(tmp_path, capsys):
    from addcomb.core import canonical_line, point
    from addcomb.incidence import Arrangement, write_arrangement

    arr = Arrangement.build([point(0, 0), point(1, 1)],
                            [canonical_line(1, -1, 0)])
    path = tmp_path / "arr.json"
    write_arrangement(path, arr)
    assert run(["incidence", "--arrangement", str(path)]) == 0
    assert "ok=True" in capsys.readouterr().out


def test_verify_oracle_suite_exit_zero(capsys):
    assert run(["verify", "--suite", "oracle"]) == 0
    assert "VERIFY PASS" in capsys.readouterr().out


def test_verify_custom_corpus(tmp_path, capsys):
    corpus = tmp_path / "corpus.json"
    corpus.write_text(json.dumps([
        {"kind": "AP", "start": "1", "step": "1", "n": 8},
        {"kind": "GridExample", "s": 2, "p": 2},
    ]))
    assert run(["verify", "--suite", "regularization",
                "--corpus", str(corpus)]) == 0
    assert "VERIFY PASS" in capsys.readouterr().out


def test_report_shift_product(tmp_path, capsys):
    s = tmp_path / "s.txt"
    s.write_text("1\n2\n4\n8\n")
    rep = tmp_path / "r.json"
    assert run(["report", "--set", str(s), "--alpha", "1", "--beta", "1",
                "--json", str(rep)]) == 0
    assert "K_mul=7/4" in capsys.readouterr().out
    assert json.loads(rep.read_text())["payload"]["shifted_product_size"] == 10


def test_error_exit_code(tmp_path, capsys):
    missing = tmp_path / "nope.txt"
    missing.write_text("# empty\n")
    assert run(["energy", "--set", str(missing)]) == 1
    assert "error:" in capsys.readouterr().err


def test_json_to_stdout(tmp_path, capsys):
    s = tmp_path / "s.txt"
    s.write_text("1\n2\n")
    assert run(["energy", "--set", str(s), "--json", "-"]) == 0
    out = capsys.readouterr().out
    doc = json.loads(out.splitlines()[-1])
    assert doc["command"] == "energy"
