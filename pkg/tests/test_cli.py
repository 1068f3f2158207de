import io
import json
import subprocess
import sys

import pytest

from interval_enum import enumerator
from interval_enum.cli import main
from interval_enum.graph import Graph
from interval_enum.graph6 import to_graph6


def run(argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def without_seconds(text):
    return [line.rsplit(",", 1)[0] for line in text.splitlines()]


def test_enumerate_n5_row():
    code, out = run(["enumerate", "--n", "5", "--threads", "1"])
    assert code == 0
    assert out.splitlines()[1].startswith("5,27,945,")


GOLDEN_0_TO_6 = [
    "n,i_n,matchings,lower_bound,upper_bound",
    "0,1,1,,1",
    "1,1,1,,1",
    "2,2,3,,3",
    "3,4,15,1/27,15",
    "4,10,105,,105",
    "5,27,945,,945",
    "6,92,10395,2/729,10395",
]


def test_enumerate_golden_and_thread_determinism():
    outs = [run(["enumerate", "--max-n", "6", "--threads", t])[1] for t in ("1", "2")]
    assert without_seconds(outs[0]) == without_seconds(outs[1]) == GOLDEN_0_TO_6


def test_enumerate_threads_env(monkeypatch):
    monkeypatch.setenv(enumerator.THREADS_ENV, "2")
    seen = []
    real = enumerator.count_interval_graphs
    monkeypatch.setattr(enumerator, "count_interval_graphs", lambda n, t, **kw: seen.append(t) or real(n, t, **kw))
    run(["enumerate", "--n", "3"])
    run(["enumerate", "--n", "3", "--threads", "1"])
    assert seen == [2, 1]


def test_enumerate_json_and_graph6():
    code, out = run(["enumerate", "--n", "3", "--format", "json"])
    doc = json.loads(out)
    assert code == 0 and doc["i_n"] == 4 and doc["lower_bound"] == "1/27"
    code, out = run(["enumerate", "--n", "4", "--format", "graph6"])
    assert code == 0 and len(out.splitlines()) == 10


def test_enumerate_csv_persistence(tmp_path):
    path = tmp_path / "c.csv"
    run(["enumerate", "--max-n", "4", "--csv", str(path)])
    run(["enumerate", "--min-n", "3", "--max-n", "5", "--csv", str(path)])
    assert [line.split(",")[:2] for line in path.read_text().splitlines()[1:]] == [
        ["0", "1"], ["1", "1"], ["2", "2"], ["3", "4"], ["4", "10"], ["5", "27"],
    ]


def test_enumerate_capacity_refusal(capsys):
    code, _ = run(["enumerate", "--n", "11"])
    assert code == 2
    assert "13,749,310,575" in capsys.readouterr().err


def test_encode_k1():
    code, out = run(["encode", "--perm", "1"])
    assert code == 0
    assert json.loads(out) == {"n": 3, "intervals": [[2, 3], [4, 5], [1, 6]], "colors": ["red", "blue", "white"]}


def test_encode_decode_round_trip(tmp_path, monkeypatch):
    _, system = run(["encode", "--perm", "3 1 4 2"])
    code, out = run(["decode"], stdin=system, monkeypatch=monkeypatch)
    assert code == 0 and out.strip() == "3 1 4 2"
    # beyond the 32-vertex graph cap the decoder works on intervals directly
    perm = " ".join(map(str, range(20, 0, -1)))
    _, system = run(["encode", "--perm", perm])
    path = tmp_path / "big.json"
    path.write_text(system)
    assert run(["decode", "--input", str(path)])[1].strip() == perm


def test_encode_decode_errors(monkeypatch):
    assert run(["encode", "--perm", "1 1"])[0] == 2
    assert run(["decode"], stdin="not json", monkeypatch=monkeypatch)[0] == 2
    bad = json.dumps({"intervals": [[1, 12], [1, 12], [2, 3], [5, 6], [7, 8], [10, 11]],
                      "colors": ["white", "white", "red", "red", "blue", "blue"]})
    assert run(["decode"], stdin=bad, monkeypatch=monkeypatch)[0] == 2
    assert run(["decode", "--input", "/nonexistent/file.json"])[0] == 2


def test_recognize(monkeypatch):
    lines = "\n".join([to_graph6(Graph.cycle(4)), to_graph6(Graph.path(4)), '{"n": 2, "intervals": [[1, 3], [2, 4]]}'])
    code, out = run(["recognize"], stdin=lines, monkeypatch=monkeypatch)
    verdicts = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert verdicts[0]["interval"] is False and verdicts[0]["witness_kind"] == "chordless_cycle"
    assert sorted(verdicts[0]["witness"]) == [0, 1, 2, 3]
    assert verdicts[1]["interval"] is True
    assert verdicts[2] == {"interval": True, "witness_kind": "perfect_elimination_ordering", "witness": [1, 0]}


def test_recognize_bad_graph6(monkeypatch, capsys):
    code, _ = run(["recognize"], stdin="A\n", monkeypatch=monkeypatch)
    assert code == 2
    assert "line 1" in capsys.readouterr().err


def test_verify_bounds_ok():
    code, out = run(["verify-bounds", "--max-n", "6", "--threads", "1"])
    lines = out.splitlines()
    assert code == 0
    assert lines[0].endswith("lower_num,lower_den,upper,log_in,log_upper,ratio")
    assert lines[4].startswith("3,4,15,1/27,15,") and ",1,27,15," in lines[4]


def test_verify_bounds_flags_violation(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("n,i_n,matchings,lower_bound,upper_bound,seconds\n2,5,3,,3,0\n3,4,15,1/27,15,0\n")
    code, _ = run(["verify-bounds", "--csv", str(path)])
    assert code == 1
    assert "n=2" in capsys.readouterr().err


def test_oracle_verb(tmp_path):
    code, out = run(["oracle", "--max-n", "6", "--threads", "1"])
    assert code == 0 and out.splitlines()[-1] == "6,92,92,yes"
    path = tmp_path / "tampered.csv"
    path.write_text("n,i_n,matchings,lower_bound,upper_bound,seconds\n4,10,105,,105,0\n5,28,945,,945,0\n")
    code, out = run(["oracle", "--csv", str(path)])
    assert code == 1
    assert out.splitlines()[1:] == ["4,10,10,yes", "5,27,28,NO"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "interval_enum", "encode", "--perm", "2 1"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["intervals"] == [[2, 3], [5, 6], [7, 8], [10, 11], [1, 12], [4, 9]]


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--threads", "0"])
    assert exc.value.code == 2
