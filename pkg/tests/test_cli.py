import io
import json
import subprocess
import sys

import pytest

from ilth import parse_hgf, ilth_iterate, Hypergraph
from ilth.cli import main


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_round_trips(capsys):
    code, out, _ = run(capsys, ["generate", "--k", "3", "--t", "2"])
    assert code == 0
    h = parse_hgf(out)
    assert h == ilth_iterate(Hypergraph.single_edge(3), 2)[0]


def test_generate_ilth2(capsys):
    code, out, _ = run(capsys, ["generate", "--k", "3", "--t", "1", "--variant", "ilth2"])
    assert (parse_hgf(out).n, parse_hgf(out).m) == (9, 10)


def test_pipe_generate_into_metrics():
    gen = subprocess.run([sys.executable, "-m", "ilth.cli", "generate", "--k", "4", "--t", "2"],
                         capture_output=True, text=True, check=True)
    met = subprocess.run([sys.executable, "-m", "ilth.cli", "metrics"], input=gen.stdout,
                         capture_output=True, text=True, check=True)
    rep = json.loads(met.stdout)
    assert rep["schema"] == "ilth/1"
    assert (rep["n"], rep["m"], rep["diameter"]) == (16, 25, 2)


def test_metrics_spectrum(capsys, tmp_path):
    path = tmp_path / "tri.hgf"
    path.write_text("3 3 1\n0 1 2\n")
    code, out, _ = run(capsys, ["metrics", "--input", str(path), "--spectrum"])
    eig = json.loads(out)["spectrum"]["eigenvalues"]
    assert code == 0 and [round(x, 9) for x in eig] == [2, -1, -1]


def test_tables_clean(capsys):
    code, out, _ = run(capsys, ["tables", "--k", "3", "--t-max", "3"])
    rep = json.loads(out)
    assert code == 0 and rep["clean"]
    row = next(r for r in rep["rows"] if r["t"] == 3)
    assert row["counts"]["6"] == 4770


def test_motifs_generate(capsys):
    code, out, _ = run(capsys, ["motifs", "--generate", "6", "2"])
    assert code == 0 and json.loads(out)["lee"]["16"] == 7680


def test_motifs_brute_force_and_vectors(capsys):
    code, out, _ = run(capsys, ["motifs", "--generate", "3", "2", "--brute-force",
                                "--by-cardinality-vector"])
    rep = json.loads(out)
    assert rep["lee"]["11"] == 75
    assert sum(r["count"] for r in rep["cardinality_vectors"]) == rep["total"]


def test_motif_growth(capsys):
    code, out, _ = run(capsys, ["motifs", "--generate", "3", "0", "--growth", "3"])
    rows = {r["type"]: r for r in json.loads(out)["types"]}
    assert rows["motif11"]["counts"] == [0, 3, 75, 1083]


def test_clustering_iterate_tsv(capsys):
    code, out, _ = run(capsys, ["clustering", "--generate", "3", "1", "--iterate", "1",
                                "--format", "tsv"])
    lines = dict(line.split("\t") for line in out.strip().split("\n"))
    assert lines["schema"] == "ilth/1"
    assert lines["generations.0.hc1"] == "1/3"


def test_random_deterministic(capsys):
    argv = ["random", "--n", "10", "--k", "3", "--p", "1/8", "--seed", "11"]
    _, a, _ = run(capsys, argv)
    _, b, _ = run(capsys, argv)
    assert a == b and parse_hgf(a).n == 10


def test_random_summary(capsys):
    code, out, _ = run(capsys, ["random", "--n", "12", "--k", "3", "--p", "16/220", "--summary",
                                "--trials", "30"])
    rep = json.loads(out)
    assert code == 0 and rep["metrics"]["hc1"]["expected"] == pytest.approx(8 / 11)


def test_compare_deterministic_across_threads(capsys):
    base = ["compare", "--k", "3", "--t-max", "2", "--trials", "10", "--seed", "5"]
    _, a, _ = run(capsys, base + ["--threads", "1"])
    _, b, _ = run(capsys, base + ["--threads", "2"])
    assert a == b
    assert json.loads(a)["generations"][2]["m"] == 16


def test_embed(capsys, tmp_path):
    g = tmp_path / "c5.txt"
    g.write_text("5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n")
    code, out, _ = run(capsys, ["embed", "--graph", str(g), "--k", "3"])
    rep = json.loads(out)
    assert code == 0 and rep["induced"] and rep["injective"] and rep["t"] <= 7


def test_embed_without_homomorphism(capsys, tmp_path):
    g = tmp_path / "k4.txt"
    g.write_text("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    code, _, err = run(capsys, ["embed", "--graph", str(g), "--k", "3"])
    assert code == 1 and json.loads(err)["error"]["type"] == "invalid_input"


def test_output_file(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, stdout, _ = run(capsys, ["motifs", "--generate", "3", "1", "--output", str(out)])
    assert code == 0 and stdout == ""
    assert json.loads(out.read_text())["lee"]["26"] == 1


def test_malformed_hgf_error(capsys, monkeypatch):
    code, out, err = run(capsys, ["metrics"], stdin="3 4 1\n0 1 x\n", monkeypatch=monkeypatch)
    e = json.loads(err)["error"]
    assert code == 1 and out == ""
    assert (e["type"], e["line"], e["column"]) == ("format", 2, 5)


def test_missing_file(capsys):
    code, _, err = run(capsys, ["metrics", "--input", "/nonexistent/x.hgf"])
    assert code == 1 and json.loads(err)["error"]["type"] == "io"


def test_cap_exceeded(capsys, monkeypatch):
    monkeypatch.setenv("ILTH_MAX_EDGES", "100")
    code, _, err = run(capsys, ["generate", "--k", "3", "--t", "5"])
    assert code == 1 and json.loads(err)["error"]["type"] == "cap_exceeded"


def test_input_and_generate_exclusive(capsys):
    code, _, err = run(capsys, ["motifs", "--input", "x", "--generate", "3", "1"])
    assert code == 2 and json.loads(err)["error"]["type"] == "usage"


def test_bad_probability(capsys):
    code, _, err = run(capsys, ["random", "--n", "5", "--k", "3", "--p", "2"])
    assert code == 1 and json.loads(err)["error"]["type"] == "invalid_argument"


def test_nonpositive_threads_rejected():
    with pytest.raises(SystemExit):
        main(["metrics", "--threads", "0"])
