import json
import subprocess
import sys

import pytest

from insepsurf.cli import dumps, main, named, paper_suite, run_scenario


def run(*args):
    return subprocess.run([sys.executable, "-m", "insepsurf", *args], capture_output=True, text=True)


def test_analyze_bmy_json():
    p = run("analyze", "bmy", "--json")
    assert p.returncode == 0
    out = json.loads(p.stdout)
    assert out["invariants"]["chi"] == {"value": 1, "status": "exact", "by": out["invariants"]["chi"]["by"]}
    assert out["invariants"]["k2_resolved"]["value"] == 14
    assert all("by" in v and "status" in v for v in out["invariants"].values())


def test_bmy_table_mentions_bmy():
    p = run("analyze", "bmy")
    assert "BMY violated: c1^2 = 14 > 9 chi = 9" in p.stdout


def test_unclassified_exit_3():
    p = run("--json", "analyze", "bmy_genus4")
    assert p.returncode == 3
    out = json.loads(p.stdout)
    assert out["inventory"][0]["type"] == "Unclassified(6,4)"
    assert out["invariants"]["k2_singular"]["value"] == 24


def test_invalid_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"characteristic": 3, "curve_C": {"type": "p1"}, "curve_F": {"type": "p1"},
                               "vf_C": {"catalog": "delta1"}, "vf_F": {"catalog": "delta1"}}))
    assert run("analyze", str(bad)).returncode == 2
    mixed = tmp_path / "mixed.json"
    mixed.write_text(json.dumps({"characteristic": 2, "k": 1, "curve_C": {"type": "p1"}, "curve_F": {"type": "p1"},
                                 "vf_C": {"catalog": "delta1"},
                                 "vf_F": {"base": "ddx", "scale_num": [0, 1, 1]}}))
    p = run("analyze", str(mixed))
    assert p.returncode == 2 and "mixed" in p.stderr


def test_scenario_file_roundtrip(tmp_path):
    f = tmp_path / "s.json"
    f.write_text(json.dumps(named("minustwo_d8")))
    p = run("analyze", str(f), "--json")
    assert p.returncode == 0
    assert json.loads(p.stdout)["invariants"]["b2"]["value"] == 10


def test_deterministic():
    a = dumps(run_scenario(named("minustwo_d4"))[0])
    b = dumps(run_scenario(named("minustwo_d4"))[0])
    assert a == b
    assert run("analyze", "bmy", "--json").stdout == run("analyze", "bmy", "--json").stdout


def test_resolve_local():
    p = run("resolve-local", "--a", "2", "--b", "2", "--configuration", "zeros", "--json")
    out = json.loads(p.stdout)
    assert out["type"] == "D4"
    assert [v["selfint"] for v in out["graph"]["vertices"]].count(-2) == 4
    assert run("resolve-local", "--a", "6", "--b", "4", "--configuration", "poles").returncode == 3


def test_catalog_and_zeta(capsys):
    assert main(["catalog"]) == 0
    assert "artin_schreier" in capsys.readouterr().out
    assert main(["zeta", "minustwo_d4"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out["P2"]) == 7 and out["root_check"]


def test_paper_suite_passes(capsys):
    rows, ok = paper_suite()
    assert ok, [r for r in rows if not r[1]]
    assert len(rows) >= 17


def test_unknown_named():
    with pytest.raises(ValueError):
        named("nonsense")
