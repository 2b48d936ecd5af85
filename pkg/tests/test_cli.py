import json

import pytest

from chromaq.cli import main, scan, scan_exit_code, scan_summary
from chromaq.symfunc import ESym
from conftest import BOWTIE_X, CLAW_X


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def claw_file(tmp_path):
    p = tmp_path / "claw.txt"
    p.write_text("4\n1 3\n2 3\n3 4\n")
    return str(p)


def test_compute_all_bowtie(capsys):
    code, out, _ = run(capsys, "compute", "--family", "kchain", "--gamma", "3,3", "--method", "all",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["agree"]
    assert set(data["results"]) == {"brute", "forest", "llt", "kchain", "twoclique", "nbc"}
    for m in ("brute", "forest", "llt", "kchain", "twoclique"):
        assert ESym.from_json(data["results"][m]) == BOWTIE_X
    assert ESym.from_json(data["results"]["nbc"]) == BOWTIE_X.at_q(1)


def test_compute_path_forest_text(capsys):
    code, out, _ = run(capsys, "compute", "--family", "path", "--n", "6", "--method", "forest")
    assert code == 0
    assert "(q^2 + q^3)*e[2,2,2]" in out


def test_compute_nbc_edge_file(capsys, claw_file):
    code, out, _ = run(capsys, "compute", "--edges", claw_file, "--method", "nbc", "--order", "random:4",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert ESym.from_json(data["expansion"]) == CLAW_X
    assert data["graph"]["b"] is None


def test_compute_all_on_non_nuig(capsys, claw_file):
    code, out, _ = run(capsys, "compute", "--edges", claw_file, "--method", "all")
    assert code == 0
    assert "forest: skipped" in out


def test_json_round_trip_of_every_method(capsys):
    for method in ("brute", "forest", "llt"):
        code, out, _ = run(capsys, "compute", "--b", "1,2,1,2", "--method", method, "--format", "json")
        assert code == 0
        e = ESym.from_json(json.loads(out)["expansion"])
        assert ESym.from_json(json.loads(json.dumps(e.to_json()))) == e == BOWTIE_X


def test_usage_errors(capsys):
    assert run(capsys, "compute", "--b", "1,3")[0] == 2
    assert run(capsys, "compute")[0] == 2
    assert run(capsys, "compute", "--b", "1,2", "--method", "kchain")[0] == 2
    assert run(capsys, "compute", "--family", "path", "--n", "12", "--method", "brute")[0] == 2
    assert run(capsys, "compute", "--family", "path", "--n", "4", "--order", "upside", "--method", "nbc")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["compute", "--method", "telepathy"])
    assert info.value.code == 2


def test_mismatch_exits_3(capsys, monkeypatch):
    import chromaq.cli as cli
    real = cli.run_method

    def broken(method, gi, order="lex"):
        e = real(method, gi, order)
        return e + ESym.e(gi.graph.n) if method == "llt" else e

    monkeypatch.setattr(cli, "run_method", broken)
    code, _, err = run(capsys, "compute", "--b", "1,1", "--method", "all")
    assert code == 3 and "MISMATCH" in err


def test_scan_small(capsys):
    code, out, _ = run(capsys, "scan", "--n", "3")
    assert code == 0
    assert "n=3: 5 graphs" in out
    code, out, _ = run(capsys, "scan", "--n", "1", "--format", "json")
    data = json.loads(out)
    assert data["summary"]["graphs"] == 1 and data["graphs"][0]["b"] == []


def test_scan_exit_paths(capsys):
    assert run(capsys, "scan", "--n", "2", "--inject-coefficient", "1,1,3,1,1")[0] == 4
    assert run(capsys, "scan", "--n", "2", "--inject-coefficient", "1,2")[0] == 3
    assert run(capsys, "scan", "--n", "2", "--inject-coefficient", "1,2,1")[0] == 0


def test_scan_parallel_matches_serial():
    assert scan(5, jobs=2) == scan(5, jobs=1)


def test_scan_summary_n5():
    s = scan_summary(scan(5))
    assert s["graphs"] == 42 and s["not_palindromic"] == 0 and s["not_e_log_concave"] == 0
    assert scan_exit_code(s) == 0


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "involutions", "--n", "6"],
    ["verify", "--suite", "treelist", "--n", "5"],
    ["verify", "--suite", "kchain", "--max-n", "6"],
    ["verify", "--suite", "restriction", "--max-n", "5"],
])
def test_verify(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and "pass" in out


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 14
    code, out, _ = run(capsys, "enumerate", "forests", "--b", "1,2,1,2", "--type", "3,2", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 44
