from __future__ import annotations

import csv
import json

import pytest

from graphgen import improvable_example
from ropesweep import cli
from ropesweep.errors import InvariantViolation


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def last_json(out):
    return json.loads(out.strip().splitlines()[-1])


def test_enumerate(capsys):
    assert run(capsys, "enumerate", 2)[:2] == (0, "1\n")
    code, out, _ = run(capsys, "enumerate", 4)
    assert code == 0 and len(out.splitlines()) == 8
    code, _, err = run(capsys, "enumerate", 8)
    assert code == 2 and "--long" in err
    assert run(capsys, "enumerate", 9, "--long")[0] == 2
    assert run(capsys, "enumerate", 6, "--count-only")[1] == "908\n"


def test_enumerate_budget(capsys):
    assert run(capsys, "enumerate", 7, "--count-only", "--budget-seconds", "0")[0] == 3


@pytest.fixture
def files(tmp_path, capsys):
    wc = tmp_path / "wc7.txt"
    lb = tmp_path / "lb1.txt"
    assert run(capsys, "gen-worst-case", 7, "-o", wc)[0] == 0
    assert run(capsys, "gen-lower-bound", 1, "-o", lb)[0] == 0
    return {"wc": wc, "lb": lb, "dir": tmp_path}


def test_generators_write_sidecars(files):
    side = json.loads((files["dir"] / "lb1.txt.json").read_text())
    assert side["K"] == 1 and side["certificate"]["top_chain_Fl"] == 3
    assert json.loads((files["dir"] / "wc7.txt.json").read_text())["family"] == "worst_case"


def test_sweep(capsys, files):
    trace = files["dir"] / "t.jsonl"
    code, out, _ = run(capsys, "sweep", files["wc"], "--trace", trace, "--verify")
    assert code == 0
    assert last_json(out) == {"n": 7, "max_rope": 12, "moves": 48}
    assert len(trace.read_text().splitlines()) == 49
    assert last_json(run(capsys, "sweep", files["lb"])[1])["max_rope"] == 11
    assert last_json(run(capsys, "sweep", "--seed-format", "word", "2:1")[1]) == {
        "n": 2, "max_rope": 2, "moves": 3,
    }


def test_sweep_trace_is_deterministic(capsys, files):
    a, b = files["dir"] / "a.jsonl", files["dir"] / "b.jsonl"
    run(capsys, "sweep", files["lb"], "--trace", a)
    run(capsys, "sweep", files["lb"], "--trace", b)
    assert a.read_bytes() == b.read_bytes()


def test_sweep_errors(capsys, tmp_path, monkeypatch):
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n1 2 2\n")
    code, _, err = run(capsys, "sweep", bad)
    assert code == 2 and "line 2" in err
    assert run(capsys, "sweep", tmp_path / "missing.txt")[0] == 2

    def broken(g, verify=False):
        raise InvariantViolation("hugging violated", 5)

    monkeypatch.setattr(cli, "primal_dual_sweep", broken)
    code, _, err = run(capsys, "sweep", "--seed-format", "word", "3:1 2 1")
    assert code == 4 and "step 5" in err


def test_optimal(capsys, files):
    rec = last_json(run(capsys, "optimal", "--seed-format", "word", "3:1 2 1")[1])
    assert rec["optimal"] == 4
    assert last_json(run(capsys, "optimal", files["lb"])[1])["optimal"] == 11
    code, out, _ = run(capsys, "optimal", "--oracle", "--seed-format", "word", "5:4 3 2 1 4 3 2 4 3 4")
    rec = last_json(out)
    assert code == 0 and rec["agree"]
    assert rec["oracle"] == {"directed_cutwidth": rec["optimal"], "rope_search": rec["optimal"]}


def test_optimal_budget(capsys):
    word = "6:1 2 3 4 5 1 2 3 4 1 2 3 1 2 1"
    assert run(capsys, "optimal", "--budget-ideals", 1, "--seed-format", "word", word)[0] == 3


def test_experiments(capsys, tmp_path):
    out_csv, fig = tmp_path / "t.csv", tmp_path / "t.svg"
    code, _, _ = run(capsys, "experiments", "--n-min", 2, "--n-max", 5, "--csv", out_csv, "--figure", fig)
    assert code == 0
    rows = list(csv.DictReader(out_csv.open()))
    assert [r["types"] for r in rows] == ["1", "2", "8", "62"]
    assert (rows[-1]["min"], rows[-1]["max"], rows[-1]["argmax_count_raw"]) == ("6", "7", "18")
    assert list(rows[0]) == ["n", "types", "min", "max", "argmax_count_raw",
                             "argmax_count_mod_symmetry", "seconds", "status"]
    assert fig.stat().st_size > 0
    assert run(capsys, "experiments", "--n-min", 7, "--n-max", 8)[0] == 2


def test_render(capsys, files):
    d = files["dir"]
    trace = d / "t.jsonl"
    run(capsys, "sweep", files["wc"], "--trace", trace)
    side = d / "wc7.txt.json"
    code, out, _ = run(capsys, "render", files["wc"], "-o", d / "r.svg", "--trace", trace,
                       "--sidecar", side, "--step", "face:11", "--step", "0")
    assert code == 0
    paths = out.split()
    assert [p.rsplit("-", 1)[-1] for p in paths] == ["step13.svg", "step0.svg"]
    svg = (d / "r-step13.svg").read_text()
    assert svg.count('class="rope-edge"') == 12
    again = d / "again.svg"
    run(capsys, "render", files["wc"], "-o", again, "--step", "13", "--sidecar", side)
    assert again.read_bytes() == (d / "r-step13.svg").read_bytes()
    code, _, _ = run(capsys, "render", files["wc"], "-o", d / "x.svg", "--step", "999")
    assert code == 2


def test_render_lower_bound_faces(capsys, files):
    out = files["dir"] / "lb.svg"
    run(capsys, "render", files["lb"], "-o", out, "--sidecar", files["dir"] / "lb1.txt.json")
    assert out.read_text().count('class="face"') == 3


def test_cutwidth(capsys, tmp_path):
    g = tmp_path / "g.txt"
    g.write_text(improvable_example().dumps())
    rec = last_json(run(capsys, "cutwidth", g)[1])
    assert rec["cutwidth"] == 2 and max(rec["cuts"]) == 2
    rec = last_json(run(capsys, "cutwidth", g, "--reduce")[1])
    assert rec["directed_cutwidth"] == 6 and rec["reduced_n"] == 12
    rec = last_json(run(capsys, "cutwidth", g, "--to-h", "0 1 2 3")[1])
    assert rec["width"] <= 8
    rec = last_json(run(capsys, "cutwidth", g, "--to-g", "4 6 0 8 1 5 10 2 3 7 9 11")[1])
    assert rec["width"] == 2 and rec["exchanges"] == [[2, 3, 1]]
    assert run(capsys, "cutwidth", g, "--to-g", "0 1 2 3 4 5 6 7 8 9 10 11")[0] == 2
    path = tmp_path / "p.txt"
    path.write_text("directed 4\n0 1\n1 2\n2 3\n")
    assert last_json(run(capsys, "cutwidth", path)[1])["directed_cutwidth"] == 1
    cyc = tmp_path / "c.txt"
    cyc.write_text("directed 2\n0 1\n1 0\n")
    assert run(capsys, "cutwidth", cyc)[0] == 2
