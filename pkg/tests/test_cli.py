import json
import subprocess
import sys

import pytest

from conftest import DATA
from predist.cli import main
from predist.corpus import DRG_NAMES, NON_DRG_WITNESS, builtin_corpus, petersen_graph, star_graph
from predist.graph import Graph, encode_graph6

PETERSEN = encode_graph6(petersen_graph())


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_petersen_json(tmp_path, capsys):
    path = write(tmp_path, "p.g6", PETERSEN + "\n")
    code, out, _ = run(["analyze", "--kind", "both", "--json", path], capsys)
    assert code == 0
    report = json.loads(out)
    assert list(report) == ["tolerances", "graph", "D", "spectra", "polynomials", "closed_forms",
                            "means", "gates", "verdicts", "notes"]
    assert report["D"] == 2
    for kind in ("adjacency", "laplacian"):
        gate = report["gates"][kind]
        assert gate["drg"] and gate["equality"] and gate["direct_check"]
        assert gate["hm"] == gate["target"] == 4
    assert report["closed_forms"] == {"p_d(lambda_0)": 6, "r_d(0)": 6}
    assert report["spectra"]["adjacency"]["multiplicities"] == [1, 5, 4]


def test_analyze_json_is_deterministic(tmp_path, capsys):
    path = write(tmp_path, "w.g6", NON_DRG_WITNESS + "\n")
    first = run(["analyze", "--json", path], capsys)[1]
    second = run(["analyze", "--json", path], capsys)[1]
    assert first == second
    assert json.dumps(json.loads(first), indent=2) + "\n" == first


def test_analyze_text(tmp_path, capsys):
    path = write(tmp_path, "p.g6", PETERSEN)
    code, out, _ = run(["analyze", path], capsys)
    assert code == 0
    assert "verdict: adjacency: HM 4 = q_1(k) = 4; D=2, d=2; distance-regular" in out
    assert "regular_implied=True" in out


def test_analyze_stdin():
    proc = subprocess.run([sys.executable, "-m", "predist", "analyze", "--json", "-"],
                          input=PETERSEN + "\n", capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["gates"]["laplacian"]["drg"]


def test_analyze_edgelist(tmp_path, capsys):
    path = write(tmp_path, "c5.txt", "# five-cycle\n5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, out, _ = run(["analyze", "--format", "edgelist", "--json", path], capsys)
    assert code == 0
    assert json.loads(out)["gates"]["adjacency"]["drg"]


def test_irregular_with_adjacency_exits_5(tmp_path, capsys):
    path = write(tmp_path, "star.g6", encode_graph6(star_graph(3)))
    code, _, err = run(["analyze", "--kind", "adjacency", path], capsys)
    assert code == 5 and "--kind laplacian" in err
    code, out, _ = run(["analyze", "--kind", "both", "--json", path], capsys)
    assert code == 0
    report = json.loads(out)
    assert list(report["gates"]) == ["laplacian"]
    assert not report["gates"]["laplacian"]["equality"]


def test_disconnected_exits_4(tmp_path, capsys):
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    path = write(tmp_path, "tt.g6", encode_graph6(g))
    code, _, err = run(["analyze", "--kind", "laplacian", path], capsys)
    assert code == 4 and "not connected" in err


def test_parse_error_exits_3(tmp_path, capsys):
    path = write(tmp_path, "bad.g6", "D?{{\n")
    code, _, err = run(["analyze", path], capsys)
    assert code == 3 and "offset 3" in err
    path = write(tmp_path, "bad.txt", "3\n0 0\n")
    assert run(["analyze", "--format", "edgelist", path], capsys)[0] == 3


def test_missing_file_exits_2(tmp_path, capsys):
    code, _, err = run(["analyze", str(tmp_path / "nope.g6")], capsys)
    assert code == 2 and "cannot read" in err
    assert run(["census", str(tmp_path / "nope.g6")], capsys)[0] == 2


def test_bad_tolerance_exits_1(tmp_path, capsys):
    path = write(tmp_path, "p.g6", PETERSEN)
    code, _, err = run(["analyze", "--tol-group", "0", path], capsys)
    assert code == 1 and "error" in err


def test_census_empty_file(tmp_path, capsys):
    path = write(tmp_path, "empty.g6", "")
    code, out, err = run(["census", path], capsys)
    assert code == 0 and out == ""
    assert json.loads(err) == {"summary": {"scanned": 0, "hits": 0, "skipped": {}, "errors": []}}


def test_census_corpus_all_drg_hit(tmp_path, capsys):
    corpus = builtin_corpus()
    lines = [encode_graph6(corpus[name]) for name in sorted(DRG_NAMES)]
    path = write(tmp_path, "drg.g6", "\n".join(lines) + "\n")
    code, out, err = run(["census", "--kind", "both", path], capsys)
    assert code == 0
    hits = [json.loads(line) for line in out.splitlines()]
    assert len(hits) == 2 * len(lines)
    assert all(h["drg"] for h in hits)
    assert [h["graph6"] for h in hits[::2]] == lines
    assert list(hits[0]) == ["graph6", "n", "D", "d", "kind", "target", "hm", "am", "equality",
                             "direct_residual", "drg"]
    assert json.loads(err)["summary"]["hits"] == len(hits)


def test_census_cubic_workers(capsys):
    path = str(DATA / "cubic10.g6")
    one = run(["census", path], capsys)
    eight = run(["census", "--workers", "8", path], capsys)
    assert one == eight
    assert json.loads(one[1])["graph6"] == "IC`HV@QL?"


def test_census_filter(capsys):
    code, out, _ = run(["census", "--kind", "laplacian", "--filter", "d-gt-D",
                        str(DATA / "cubic_connected_le10.g6")], capsys)
    assert code == 0
    hits = [json.loads(line) for line in out.splitlines()]
    assert hits and all(h["d"] > h["D"] and not h["drg"] for h in hits)


def test_selftest_passes(capsys):
    code, out, _ = run(["selftest"], capsys)
    assert code == 0
    assert out.rstrip().endswith("selftest passed")
    assert "FAIL" not in out


def test_selftest_flags_coarse_grouping(capsys):
    code, out, _ = run(["selftest", "--tol-group", "0.1"], capsys)
    assert code == 1
    assert "FAIL grouping stability" in out and "ambiguous" in out


def test_selftest_flags_exact_equality(capsys):
    code, out, _ = run(["selftest", "--tol-eq", "0"], capsys)
    assert code == 1
    assert "FAIL equality consistency" in out


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith("predist ")
