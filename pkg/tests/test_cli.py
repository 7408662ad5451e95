import json
import subprocess
import sys

import pytest

from cyclejoin.cli import RunConfig, main, parse_config, run
from cyclejoin.joiner import verify_debruijn


def call(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_worked_instance(capsys):
    code, out, _ = call(capsys, "count", "--p", "0x1F", "--q", "0x13")
    assert code == 0
    d = json.loads(out)
    assert d["exact"] == "2003859941621760000"
    assert d["closed_form"] is None
    code, out, _ = call(capsys, "count", "--p", "0x1F", "--q", "0x13", "--format", "text")
    assert out.splitlines()[0] == "2003859941621760000"


def test_count_reports_closed_form(capsys):
    code, out, _ = call(capsys, "count", "--p", "0x7", "--q", "x^4+x+1")
    d = json.loads(out)
    assert d["exact"] == "2880" and d["closed_form"]["per_poly"] == 2880


def test_generate_all_order5(capsys):
    code, out, _ = call(capsys, "generate", "--p", "0x7", "--q", "0xB", "--all")
    d = json.loads(out)
    assert code == 0 and d["count"] == 20
    assert all(verify_debruijn(s["seq"], 5) for s in d["sequences"])
    assert all("+x0+" in s["anf"] for s in d["sequences"])


def test_generate_deterministic(capsys):
    a = call(capsys, "generate", "--p", "0x1F", "--q", "0x13", "--count", "3", "--seed", "9")
    b = call(capsys, "generate", "--p", "0x1F", "--q", "0x13", "--count", "3", "--seed", "9")
    assert a == b
    c = call(capsys, "generate", "--p", "0x1F", "--q", "0x13", "--count", "2",
             "--format", "hex")
    assert all(len(line) == 64 for line in c[1].split())


def test_verify(capsys):
    assert call(capsys, "verify", "--order", "3", "--seq", "11000101")[:2] == (0, "pass\n")
    assert call(capsys, "verify", "--order", "3", "--seq", "00000000")[0] == 1
    code, _, err = call(capsys, "verify", "--order", "3", "--seq", "0101")
    assert code == 2 and "error" in json.loads(err)


@pytest.mark.parametrize("argv,msg", [
    (["count", "--p", "0x13", "--q", "0x13"], "distinct"),
    (["count", "--p", "0x5", "--q", "0x13"], "reducible"),
    (["count", "--p", "zz", "--q", "0x13"], "--p"),
    (["cycles", "--p", "0x13"], "--q"),
])
def test_structured_errors(capsys, argv, msg):
    code, out, err = call(capsys, *argv)
    assert code == 2 and out == ""
    assert msg in json.loads(err)["error"]


def test_classify_tables_cycles(capsys):
    d = json.loads(call(capsys, "classify", "--p", "0x1F")[1])
    assert d["order"] == 5 and d["cofactor_t"] == 3 and not d["primitive"]
    d = json.loads(call(capsys, "tables", "--p", "0x13", "--t", "3")[1])
    assert d["k"] == 4 and d["zech"][1:] == [4, 8, 14, 1, 10, 13, 9, 2, 7, 5, 12, 11, 6, 3]
    assert d["cyclotomic"]["matrix"] == [[0, 2, 2], [2, 2, 1], [2, 1, 2]]
    d = json.loads(call(capsys, "cycles", "--p", "0x1F", "--q", "0x13")[1])
    assert len(d["cycles"]) == 20 and d["special"] == {"a": 1, "b": 0, "c": 4}


def test_pairs_and_graph(capsys):
    out = call(capsys, "pairs", "--p", "0x1F", "--q", "0x13", "--c1", "U0", "--c2",
               "MIX:0,0,0")[1]
    d = json.loads(out)
    assert d["c1"] == "U0" and d["c2"] == "MIX:0,0,0" and d["count"] == 1
    lines = call(capsys, "pairs", "--p", "0x7", "--q", "0xB")[1].splitlines()
    assert sum(json.loads(x)["count"] for x in lines) == 16
    dot = call(capsys, "graph", "--p", "0x7", "--q", "0xB", "--format", "dot")[1]
    assert dot.startswith("graph adjacency") and "loops 6" in dot
    g = json.loads(call(capsys, "graph", "--p", "0x7", "--q", "0xB", "--jobs", "0")[1])
    assert g["M"][0] == [1, 0, 0, -1]


def test_out_flag(tmp_path, capsys):
    path = tmp_path / "c.json"
    code, out, _ = call(capsys, "count", "--p", "0x7", "--q", "0xB", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["exact"] == "20"


def test_reproduce_command(capsys):
    code, out, _ = call(capsys, "reproduce")
    assert code == 0
    assert "FAIL" not in out and out.count("PASS") == 11


def test_run_config_direct():
    cfg = parse_config(["classify", "--p", "x^2+x+1"])
    assert isinstance(cfg, RunConfig) and cfg.p == 7
    import io
    buf = io.StringIO()
    assert run(cfg, stdout=buf) == 0 and json.loads(buf.getvalue())["order"] == 3


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cyclejoin", "verify", "--order", "3",
                          "--seq", "11000101"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "pass\n"
