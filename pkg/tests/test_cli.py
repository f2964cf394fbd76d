import json

import pytest

from spin9lab import cli
from spin9lab.exterior import hodge, loads


def test_unknown_command_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        cli.main(["nosuchsuite"])
    assert exc.value.code == 2


def test_bad_draws(capsys):
    assert cli.main(["twistor", "--draws", "0"]) == 2


def test_clifford_exit_zero(tmp_path, capsys):
    out = tmp_path / "c.json"
    assert cli.main(["clifford", "--json", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["suite"] == "clifford" and rep["elapsed_ms"] is None
    assert "PASS clifford.relations" in capsys.readouterr().out


def test_timing_flag(tmp_path, capsys):
    out = tmp_path / "c.json"
    cli.main(["clifford", "--timing", "--json", str(out)])
    assert isinstance(json.loads(out.read_text())["elapsed_ms"], int)


def test_omega8_out_roundtrip(tmp_path, capsys):
    out = tmp_path / "omega8.txt"
    assert cli.main(["omega8", "--out", str(out)]) == 0
    w = loads(out.read_text(), 16)
    assert w.k == 8 and len(w) == 702
    assert hodge(w) == w


def test_twistor_seeded_reports_repeat(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for f in (a, b):
        assert cli.main(["twistor", "--seed", "7", "--draws", "2", "--json", str(f)]) == 0
    assert a.read_bytes() == b.read_bytes()
