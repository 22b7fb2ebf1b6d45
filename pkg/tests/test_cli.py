import subprocess
import sys

import pytest

from colordisconnect.cli import main
from colordisconnect.formats import emit_dimacs, emit_edge_list, parse_dot, parse_graph_file
from colordisconnect.generators import complete_bipartite, complete_graph, cycle_graph, petersen, subdivided_k4
from colordisconnect.reductions import CnfFormula


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def test_pd_and_witness(files, tmp_path, capsys):
    path = files("k4.txt", emit_edge_list(complete_graph(4)))
    out = tmp_path / "col.txt"
    assert main(["pd", path, "--out", str(out)]) == 0
    assert capsys.readouterr().out == "pd = 2\n"
    gf = parse_graph_file(out.read_text())
    assert gf.edge_coloring.used() == {1, 2}
    assert main(["verify-pd", str(out)]) == 0
    assert main(["verify-pd", path]) == 1


def test_budget_refusal(files, capsys):
    path = files("k6.txt", emit_edge_list(complete_graph(6)))
    assert main(["pd", path, "--budget-edges", "10"]) == 2
    assert "refused" in capsys.readouterr().err
    assert main(["rvd", path, "--budget-vertices", "4"]) == 2


def test_rvd(files, tmp_path, capsys):
    path = files("c4.txt", emit_edge_list(cycle_graph(4)))
    dot = tmp_path / "c4.dot"
    assert main(["rvd", path, "--dot", str(dot)]) == 0
    assert capsys.readouterr().out == "rvd = 2\n"
    assert parse_dot(dot.read_text()).vertex_coloring is not None


def test_verify_rvd_needs_coloring(files):
    path = files("c4.txt", emit_edge_list(cycle_graph(4)))
    assert main(["verify-rvd", path]) == 2


def test_matching_cut(files, capsys):
    path = files("c6.txt", emit_edge_list(cycle_graph(6)))
    assert main(["matching-cut", path, "1", "4"]) == 0
    assert capsys.readouterr().out.startswith("matching cut edges:")
    assert main(["matching-cut", path, "1", "4", "--casework"]) == 2
    sk4 = files("sk4.txt", emit_edge_list(subdivided_k4()))
    assert main(["matching-cut", sk4, "1", "2", "--casework"]) == 0
    assert capsys.readouterr().out.startswith("case:")
    k4 = files("k4.txt", emit_edge_list(complete_graph(4)))
    assert main(["matching-cut", k4, "1", "2"]) == 1
    assert main(["matching-cut", k4]) == 2
    assert main(["matching-cut", path, "1", "9"]) == 2


def test_color_deg3_and_classify(files, capsys):
    path = files("p.txt", emit_edge_list(petersen()))
    assert main(["color-deg3", path]) == 0
    assert capsys.readouterr().out.startswith("colors used: 2")
    k23 = files("k23.txt", emit_edge_list(complete_bipartite(2, 3)))
    assert main(["classify", k23]) == 0
    assert capsys.readouterr().out.startswith("pd = 2 (K23")
    assert main(["classify", path]) == 2


def test_reduce_and_xcheck(files, tmp_path, capsys):
    cnf = files("f.cnf", emit_dimacs(CnfFormula.from_ints(2, [[1, -2, 2]])))
    for kind in ("nae", "rvd-base", "rvd-deg3", "rvd-bipartite", "pad"):
        out = tmp_path / f"{kind}.txt"
        assert main(["reduce", kind, cnf, "--k", "3", "--out", str(out)]) == 0
        assert len(parse_graph_file(out.read_text()).terminals) == 2
    g = files("c5.txt", emit_edge_list(cycle_graph(5)))
    assert main(["reduce", "star4cycle", g]) == 0
    capsys.readouterr()
    assert main(["xcheck", cnf]) == 0
    assert capsys.readouterr().out.strip().endswith("4/4 checks agree")
    assert main(["xcheck", "--exhaustive", "1", "1", "--reduction", "pad", "--k", "3"]) == 0
    assert main(["xcheck"]) == 2
    assert main(["reduce", "nae", files("bad.cnf", "p cnf 1 1\n1 2 3 0\n")]) == 2


def test_fixed_seed_output_is_byte_identical(capsys):
    runs = []
    for _ in range(2):
        main(["gen", "indep-deg3-class", "--n", "9", "--count", "3", "--seed", "4"])
        main(["gen", "random-cnf", "--n", "3", "--m", "2", "--count", "3", "--seed", "4"])
        main(["xcheck", "--random", "3", "--n", "3", "--m", "2", "--seed", "4"])
        runs.append(capsys.readouterr().out)
    assert runs[0] == runs[1] and runs[0]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "colordisconnect.cli", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "xcheck" in proc.stdout
